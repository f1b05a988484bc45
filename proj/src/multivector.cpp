#include "liebial/multivector.hpp"

#include <algorithm>

namespace liebial {

namespace {

int sortWithSign(std::vector<int>& idx) {
    int sign = 1;
    for (size_t i = 1; i < idx.size(); ++i) {
        for (size_t j = i; j > 0 && idx[j] < idx[j - 1]; --j) {
            std::swap(idx[j], idx[j - 1]);
            sign = -sign;
        }
    }
    for (size_t i = 1; i < idx.size(); ++i)
        if (idx[i] == idx[i - 1])
            return 0;
    return sign;
}

void requireSameCtx(const ContextPtr& a, const ContextPtr& b) {
    if (a != b)
        throw std::invalid_argument("context mismatch");
}

}  // namespace

ContextPtr makeContext(int n, std::vector<std::string> coords, LieAlgebraData L) {
    if (static_cast<int>(coords.size()) != n)
        throw std::invalid_argument("coordinate count does not match dimension");
    auto ctx = std::make_shared<Context>();
    ctx->n = n;
    ctx->coords = std::move(coords);
    ctx->L = std::move(L);
    return ctx;
}

void Multivector::add(std::vector<int> base, std::vector<int> alg, const ScalarFn& coeff) {
    if (coeff.isZero())
        return;
    int sb = sortWithSign(base);
    int sa = sortWithSign(alg);
    if (sb == 0 || sa == 0)
        return;
    ScalarFn c = sb * sa == 1 ? coeff : -coeff;
    MonoKey key{std::move(base), std::move(alg)};
    auto it = comps_.find(key);
    if (it == comps_.end()) {
        comps_.emplace(std::move(key), c);
    } else {
        it->second = it->second + c;
        if (it->second.isZero())
            comps_.erase(it);
    }
}

ScalarFn Multivector::coeff(const std::vector<int>& base, const std::vector<int>& alg) const {
    auto it = comps_.find({base, alg});
    return it == comps_.end() ? ScalarFn(ctx_ ? ctx_->n : 0) : it->second;
}

Multivector Multivector::operator+(const Multivector& o) const {
    requireSameCtx(ctx_, o.ctx_);
    Multivector r = *this;
    for (const auto& [k, c] : o.comps_)
        r.add(k.first, k.second, c);
    return r;
}

Multivector Multivector::operator-() const {
    Multivector r(ctx_);
    for (const auto& [k, c] : comps_)
        r.comps_[k] = -c;
    return r;
}

Multivector Multivector::operator-(const Multivector& o) const { return *this + (-o); }

Multivector Multivector::scaled(const Rational& r) const {
    return scaled(ScalarFn::constant(ctx_ ? ctx_->n : 0, r));
}

Multivector Multivector::scaled(const ScalarFn& f) const {
    Multivector r(ctx_);
    if (f.isZero())
        return r;
    for (const auto& [k, c] : comps_)
        r.add(k.first, k.second, c * f);
    return r;
}

bool Multivector::operator==(const Multivector& o) const { return (*this - o).isZero(); }

bool Multivector::homogeneous(int d) const {
    for (const auto& [k, c] : comps_)
        if (static_cast<int>(k.first.size() + k.second.size()) != d)
            return false;
    return true;
}

Multivector Multivector::fromScalar(ContextPtr ctx, const ScalarFn& f) {
    Multivector r(std::move(ctx));
    r.add({}, {}, f);
    return r;
}

Multivector Multivector::baseVector(ContextPtr ctx, int i) {
    int n = ctx->n;
    Multivector r(std::move(ctx));
    r.add({i}, {}, ScalarFn::constant(n, 1));
    return r;
}

Multivector Multivector::algElement(ContextPtr ctx, const AlgMultivector& A) {
    if (A.dim() != ctx->n)
        throw std::invalid_argument("scalar dimension mismatch");
    Multivector r(std::move(ctx));
    for (const auto& [idx, c] : A.comps())
        r.add({}, idx, c);
    return r;
}

Covector Covector::zero(ContextPtr ctx) {
    Covector phi;
    phi.alpha.assign(ctx->n, ScalarFn(ctx->n));
    phi.xi.assign(ctx->k(), ScalarFn(ctx->n));
    phi.ctx = std::move(ctx);
    return phi;
}

Covector Covector::dx(ContextPtr ctx, int i) {
    Covector phi = zero(ctx);
    phi.alpha[i] = ScalarFn::constant(ctx->n, 1);
    return phi;
}

Covector Covector::dual(ContextPtr ctx, int a) {
    Covector phi = zero(ctx);
    phi.xi[a] = ScalarFn::constant(ctx->n, 1);
    return phi;
}

Covector Covector::operator+(const Covector& o) const {
    requireSameCtx(ctx, o.ctx);
    Covector r = *this;
    for (size_t i = 0; i < alpha.size(); ++i)
        r.alpha[i] = r.alpha[i] + o.alpha[i];
    for (size_t a = 0; a < xi.size(); ++a)
        r.xi[a] = r.xi[a] + o.xi[a];
    return r;
}

Covector Covector::operator-() const {
    Covector r = *this;
    for (auto& c : r.alpha)
        c = -c;
    for (auto& c : r.xi)
        c = -c;
    return r;
}

Covector Covector::operator-(const Covector& o) const { return *this + (-o); }

Covector Covector::scaled(const ScalarFn& f) const {
    Covector r = *this;
    for (auto& c : r.alpha)
        c = c * f;
    for (auto& c : r.xi)
        c = c * f;
    return r;
}

bool Covector::isZero() const {
    for (const auto& c : alpha)
        if (!c.isZero())
            return false;
    for (const auto& c : xi)
        if (!c.isZero())
            return false;
    return true;
}

bool Covector::operator==(const Covector& o) const { return (*this - o).isZero(); }

Multivector wedge(const Multivector& P, const Multivector& Q) {
    requireSameCtx(P.ctx(), Q.ctx());
    Multivector r(P.ctx());
    for (const auto& [ka, ca] : P.comps()) {
        for (const auto& [kb, cb] : Q.comps()) {
            std::vector<int> base = ka.first;
            base.insert(base.end(), kb.first.begin(), kb.first.end());
            std::vector<int> alg = ka.second;
            alg.insert(alg.end(), kb.second.begin(), kb.second.end());
            ScalarFn c = ca * cb;
            // P's algebra factors move past Q's base factors.
            if ((ka.second.size() * kb.first.size()) % 2 != 0)
                c = -c;
            r.add(std::move(base), std::move(alg), c);
        }
    }
    return r;
}

Multivector contract(const Multivector& P, const Covector& phi) {
    requireSameCtx(P.ctx(), phi.ctx);
    Multivector r(P.ctx());
    for (const auto& [k, c] : P.comps()) {
        const std::vector<int>& base = k.first;
        const std::vector<int>& alg = k.second;
        int sign = 1;
        for (size_t j = 0; j < base.size(); ++j) {
            const ScalarFn& pairing = phi.alpha[base[j]];
            if (!pairing.isZero()) {
                std::vector<int> rest = base;
                rest.erase(rest.begin() + j);
                ScalarFn v = c * pairing;
                r.add(std::move(rest), alg, sign == 1 ? v : -v);
            }
            sign = -sign;
        }
        for (size_t j = 0; j < alg.size(); ++j) {
            const ScalarFn& pairing = phi.xi[alg[j]];
            if (!pairing.isZero()) {
                std::vector<int> rest = alg;
                rest.erase(rest.begin() + j);
                ScalarFn v = c * pairing;
                r.add(base, std::move(rest), sign == 1 ? v : -v);
            }
            sign = -sign;
        }
    }
    return r;
}

Multivector bigrade(const Multivector& P, int p, int q) {
    Multivector r(P.ctx());
    for (const auto& [k, c] : P.comps())
        if (static_cast<int>(k.first.size()) == p && static_cast<int>(k.second.size()) == q)
            r.add(k.first, k.second, c);
    return r;
}

Multivector lie_derivative(const Multivector& X, const Multivector& P) {
    requireSameCtx(X.ctx(), P.ctx());
    const int n = X.ctx()->n;
    std::vector<ScalarFn> Xc(n, ScalarFn(n));
    for (const auto& [k, c] : X.comps()) {
        if (k.first.size() != 1 || !k.second.empty())
            throw std::invalid_argument("expected a vector field of bigrade (1,0)");
        Xc[k.first[0]] = c;
    }
    Multivector r(P.ctx());
    for (const auto& [k, c] : P.comps()) {
        // X acting on the coefficient
        ScalarFn xf(n);
        for (int m = 0; m < n; ++m)
            xf = xf + Xc[m] * c.derivative(m);
        r.add(k.first, k.second, xf);
        // [X, d/dx_i] = -sum_m (dX^m/dx_i) d/dx_m on each tangent factor
        for (size_t j = 0; j < k.first.size(); ++j) {
            int i = k.first[j];
            for (int m = 0; m < n; ++m) {
                ScalarFn d = Xc[m].derivative(i);
                if (d.isZero())
                    continue;
                std::vector<int> base = k.first;
                base[j] = m;
                r.add(std::move(base), k.second, -(c * d));
            }
        }
    }
    return r;
}

void GForm::add(std::vector<int> formIdx, const AlgMultivector& value) {
    if (static_cast<int>(formIdx.size()) != formDeg_)
        throw std::invalid_argument("form index count does not match degree");
    if (value.degree() != algDeg_ || value.dim() != ctx_->n)
        throw std::invalid_argument("value degree or dimension mismatch");
    if (value.isZero())
        return;
    int sign = sortWithSign(formIdx);
    if (sign == 0)
        return;
    AlgMultivector v = sign == 1 ? value : -value;
    auto it = comps_.find(formIdx);
    if (it == comps_.end()) {
        comps_.emplace(std::move(formIdx), v);
    } else {
        it->second = it->second + v;
        if (it->second.isZero())
            comps_.erase(it);
    }
}

AlgMultivector GForm::coeff(const std::vector<int>& sortedIdx) const {
    auto it = comps_.find(sortedIdx);
    return it == comps_.end() ? AlgMultivector(ctx_ ? ctx_->n : 0, algDeg_) : it->second;
}

GForm GForm::operator+(const GForm& o) const {
    requireSameCtx(ctx_, o.ctx_);
    if (formDeg_ != o.formDeg_ || algDeg_ != o.algDeg_)
        throw std::invalid_argument("degree mismatch");
    GForm r = *this;
    for (const auto& [k, v] : o.comps_)
        r.add(k, v);
    return r;
}

GForm GForm::operator-() const {
    GForm r(ctx_, formDeg_, algDeg_);
    for (const auto& [k, v] : comps_)
        r.comps_[k] = -v;
    return r;
}

GForm GForm::operator-(const GForm& o) const { return *this + (-o); }

bool GForm::operator==(const GForm& o) const { return (*this - o).isZero(); }

GForm GForm::fromAlg(ContextPtr ctx, const AlgMultivector& A) {
    GForm r(ctx, 0, A.degree());
    r.add({}, A);
    return r;
}

GForm de_rham(const GForm& omega) {
    GForm r(omega.ctx(), omega.formDegree() + 1, omega.algDegree());
    const int n = omega.ctx()->n;
    for (const auto& [idx, v] : omega.comps()) {
        for (int i = 0; i < n; ++i) {
            AlgMultivector dv = v.derivative(i);
            if (dv.isZero())
                continue;
            std::vector<int> k;
            k.push_back(i);
            k.insert(k.end(), idx.begin(), idx.end());
            r.add(std::move(k), dv);
        }
    }
    return r;
}

std::string printMultivector(const Multivector& P) {
    if (P.isZero())
        return "0";
    const Context& ctx = *P.ctx();
    std::string out;
    for (const auto& [k, c] : P.comps()) {
        if (!out.empty())
            out += " + ";
        out += "(" + printScalar(c, ctx.coords) + ")";
        std::string factors;
        for (int i : k.first)
            factors += (factors.empty() ? "" : "^") + ("@" + ctx.coords[i]);
        for (int a : k.second)
            factors += (factors.empty() ? "" : "^") + ctx.L.basisNames[a];
        if (!factors.empty())
            out += "*" + factors;
    }
    return out;
}

}  // namespace liebial
