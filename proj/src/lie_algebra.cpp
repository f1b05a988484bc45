#include "liebial/lie_algebra.hpp"

#include <algorithm>

namespace liebial {

namespace {

/// Sorts generator indices, returning the permutation sign, or 0 on a
/// repeated index.
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

}  // namespace

LieAlgebraData LieAlgebraData::sl2() {
    LieAlgebraData L;
    L.k = 3;
    L.basisNames = {"H", "E+", "E-"};
    L.setBracket(0, 1, {{1, 1}});   // [H, E+] = E+
    L.setBracket(0, 2, {{2, -1}});  // [H, E-] = -E-
    L.setBracket(1, 2, {{0, 2}});   // [E+, E-] = 2H
    return L;
}

LieAlgebraData LieAlgebraData::abelian(int k) {
    LieAlgebraData L;
    L.k = k;
    for (int i = 0; i < k; ++i)
        L.basisNames.push_back("e" + std::to_string(i + 1));
    return L;
}

Rational LieAlgebraData::structure(int a, int b, int d) const {
    if (a == b)
        return 0;
    int sign = 1;
    if (a > b) {
        std::swap(a, b);
        sign = -1;
    }
    auto it = c.find({a, b});
    if (it == c.end())
        return 0;
    auto jt = it->second.find(d);
    return jt == it->second.end() ? Rational(0) : Rational(sign) * jt->second;
}

void LieAlgebraData::setBracket(int a, int b, const std::map<int, Rational>& components) {
    if (a == b)
        throw std::invalid_argument("bracket of a generator with itself");
    int sign = 1;
    if (a > b) {
        std::swap(a, b);
        sign = -1;
    }
    std::map<int, Rational>& slot = c[{a, b}];
    slot.clear();
    for (const auto& [d, v] : components)
        if (v != 0)
            slot[d] = Rational(sign) * v;
    if (slot.empty())
        c.erase({a, b});
}

bool Cobracket::isZero() const {
    for (const auto& [a, m] : d)
        for (const auto& [bc, v] : m)
            if (v != 0)
                return false;
    return true;
}

void AlgMultivector::add(std::vector<int> idx, const ScalarFn& coeff) {
    if (static_cast<int>(idx.size()) != degree_)
        throw std::invalid_argument("index count does not match degree");
    if (coeff.isZero())
        return;
    int sign = sortWithSign(idx);
    if (sign == 0)
        return;
    ScalarFn c = sign == 1 ? coeff : -coeff;
    auto it = comps_.find(idx);
    if (it == comps_.end()) {
        comps_.emplace(std::move(idx), c);
    } else {
        it->second = it->second + c;
        if (it->second.isZero())
            comps_.erase(it);
    }
}

ScalarFn AlgMultivector::coeff(const std::vector<int>& sortedIdx) const {
    auto it = comps_.find(sortedIdx);
    return it == comps_.end() ? ScalarFn(dim_) : it->second;
}

AlgMultivector AlgMultivector::operator+(const AlgMultivector& o) const {
    if (degree_ != o.degree_ || dim_ != o.dim_)
        throw std::invalid_argument("degree or dimension mismatch");
    AlgMultivector r = *this;
    for (const auto& [k, c] : o.comps_)
        r.add(k, c);
    return r;
}

AlgMultivector AlgMultivector::operator-() const {
    AlgMultivector r(dim_, degree_);
    for (const auto& [k, c] : comps_)
        r.comps_[k] = -c;
    return r;
}

AlgMultivector AlgMultivector::operator-(const AlgMultivector& o) const { return *this + (-o); }

AlgMultivector AlgMultivector::scaled(const Rational& r) const {
    return scaled(ScalarFn::constant(dim_, r));
}

AlgMultivector AlgMultivector::scaled(const ScalarFn& f) const {
    AlgMultivector r(dim_, degree_);
    if (f.isZero())
        return r;
    for (const auto& [k, c] : comps_)
        r.add(k, c * f);
    return r;
}

AlgMultivector AlgMultivector::wedge(const AlgMultivector& o) const {
    AlgMultivector r(dim_, degree_ + o.degree_);
    for (const auto& [ka, ca] : comps_) {
        for (const auto& [kb, cb] : o.comps_) {
            std::vector<int> k = ka;
            k.insert(k.end(), kb.begin(), kb.end());
            r.add(std::move(k), ca * cb);
        }
    }
    return r;
}

AlgMultivector AlgMultivector::derivative(int i) const {
    AlgMultivector r(dim_, degree_);
    for (const auto& [k, c] : comps_)
        r.add(k, c.derivative(i));
    return r;
}

bool AlgMultivector::operator==(const AlgMultivector& o) const {
    return (*this - o).isZero();
}

bool AlgMultivector::isConstant() const {
    for (const auto& [k, c] : comps_)
        if (!c.constantValue(nullptr))
            return false;
    return true;
}

AlgMultivector AlgMultivector::basisElement(int dim, int k, std::vector<int> idx) {
    (void)k;
    AlgMultivector r(dim, static_cast<int>(idx.size()));
    r.add(std::move(idx), ScalarFn::constant(dim, 1));
    return r;
}

bool checkJacobi(const LieAlgebraData& L) {
    for (int a = 0; a < L.k; ++a)
        for (int b = a + 1; b < L.k; ++b)
            for (int e = b + 1; e < L.k; ++e)
                for (int d = 0; d < L.k; ++d) {
                    Rational sum = 0;
                    // [[e_a, e_b], e_c] + cyclic
                    for (int m = 0; m < L.k; ++m) {
                        sum += L.structure(a, b, m) * L.structure(m, e, d);
                        sum += L.structure(b, e, m) * L.structure(m, a, d);
                        sum += L.structure(e, a, m) * L.structure(m, b, d);
                    }
                    if (sum != 0)
                        return false;
                }
    return true;
}

namespace {

/// Bracket of two monomials, by structural recursion on the graded Leibniz
/// rule.  f, g are the coefficients; Tp, Tq the sorted generator lists.
AlgMultivector bracketMono(const LieAlgebraData& L, int dim, const std::vector<int>& Tp,
                           const ScalarFn& f, const std::vector<int>& Tq, const ScalarFn& g) {
    const int p = static_cast<int>(Tp.size());
    const int q = static_cast<int>(Tq.size());
    if (p == 0 || q == 0)
        return AlgMultivector(dim, p + q >= 1 ? p + q - 1 : 0);
    if (p == 1 && q == 1) {
        AlgMultivector r(dim, 1);
        ScalarFn fg = f * g;
        for (int d = 0; d < L.k; ++d) {
            Rational c = L.structure(Tp[0], Tq[0], d);
            if (c != 0)
                r.add({d}, fg.scaled(c));
        }
        return r;
    }
    if (p == 1) {
        // [u, v ^ Q'] = [u, v] ^ Q' + v ^ [u, Q']
        std::vector<int> v = {Tq[0]};
        std::vector<int> rest(Tq.begin() + 1, Tq.end());
        ScalarFn one = ScalarFn::constant(dim, 1);
        AlgMultivector uv = bracketMono(L, dim, Tp, f, v, g);
        AlgMultivector restMono(dim, q - 1);
        restMono.add(rest, one);
        AlgMultivector term1 = uv.wedge(restMono);
        AlgMultivector vMono(dim, 1);
        vMono.add(v, one);
        AlgMultivector term2 = vMono.wedge(bracketMono(L, dim, Tp, f, rest, g));
        return term1 + term2;
    }
    // [u ^ P', Q] = u ^ [P', Q] + (-1)^{(q-1)(p-1)} [u, Q] ^ P'
    std::vector<int> u = {Tp[0]};
    std::vector<int> rest(Tp.begin() + 1, Tp.end());
    ScalarFn one = ScalarFn::constant(dim, 1);
    AlgMultivector uMono(dim, 1);
    uMono.add(u, one);
    AlgMultivector term1 = uMono.wedge(bracketMono(L, dim, rest, f, Tq, g));
    AlgMultivector restMono(dim, p - 1);
    restMono.add(rest, f);
    AlgMultivector uQ = bracketMono(L, dim, u, one, Tq, g);
    AlgMultivector term2 = uQ.wedge(restMono);
    if (((q - 1) * (p - 1)) % 2 != 0)
        term2 = -term2;
    return term1 + term2;
}

}  // namespace

AlgMultivector algSchouten(const LieAlgebraData& L, const AlgMultivector& P,
                           const AlgMultivector& Q) {
    if (P.dim() != Q.dim())
        throw std::invalid_argument("dimension mismatch");
    int deg = P.degree() + Q.degree() - 1;
    AlgMultivector r(P.dim(), deg < 0 ? 0 : deg);
    for (const auto& [kp, f] : P.comps())
        for (const auto& [kq, g] : Q.comps())
            r = r + bracketMono(L, P.dim(), kp, f, kq, g);
    return r;
}

Cobracket coboundaryCobracket(const LieAlgebraData& L, const AlgMultivector& r0) {
    if (!r0.isConstant())
        throw std::invalid_argument("coboundary generator must be constant");
    Cobracket delta;
    delta.k = L.k;
    for (int a = 0; a < L.k; ++a) {
        AlgMultivector ea = AlgMultivector::basisElement(r0.dim(), L.k, {a});
        AlgMultivector da = algSchouten(L, ea, r0);
        for (const auto& [idx, c] : da.comps()) {
            Rational v;
            c.constantValue(&v);
            if (v != 0)
                delta.d[a][{idx[0], idx[1]}] = v;
        }
    }
    return delta;
}

AlgMultivector cobracketOf(const Cobracket& delta, int dim, int a) {
    AlgMultivector r(dim, 2);
    auto it = delta.d.find(a);
    if (it == delta.d.end())
        return r;
    for (const auto& [bc, v] : it->second)
        r.add({bc.first, bc.second}, ScalarFn::constant(dim, v));
    return r;
}

AlgMultivector cobracketExtend(const Cobracket& delta, const AlgMultivector& P) {
    AlgMultivector r(P.dim(), P.degree() + 1);
    for (const auto& [idx, c] : P.comps()) {
        for (size_t j = 0; j < idx.size(); ++j) {
            AlgMultivector dj = cobracketOf(delta, P.dim(), idx[j]);
            for (const auto& [bc, v] : dj.comps()) {
                std::vector<int> k;
                k.insert(k.end(), idx.begin(), idx.begin() + j);
                k.push_back(bc[0]);
                k.push_back(bc[1]);
                k.insert(k.end(), idx.begin() + j + 1, idx.end());
                ScalarFn coeff = c * v;
                if (j % 2 != 0)
                    coeff = -coeff;
                r.add(std::move(k), coeff);
            }
        }
    }
    return r;
}

bool checkCocycle(const LieAlgebraData& L, const Cobracket& delta) {
    const int dim = 0;
    for (int a = 0; a < L.k; ++a) {
        for (int b = a + 1; b < L.k; ++b) {
            // delta[e_a, e_b] = e_a . delta(e_b) - e_b . delta(e_a)
            AlgMultivector lhs(dim, 2);
            for (int d = 0; d < L.k; ++d) {
                Rational c = L.structure(a, b, d);
                if (c != 0)
                    lhs = lhs + cobracketOf(delta, dim, d).scaled(c);
            }
            AlgMultivector ea = AlgMultivector::basisElement(dim, L.k, {a});
            AlgMultivector eb = AlgMultivector::basisElement(dim, L.k, {b});
            AlgMultivector rhs = algSchouten(L, ea, cobracketOf(delta, dim, b)) -
                                 algSchouten(L, eb, cobracketOf(delta, dim, a));
            if (!(lhs == rhs))
                return false;
        }
    }
    return true;
}

std::vector<AlgMultivector> deltaSquared(const LieAlgebraData& L, const Cobracket& delta) {
    std::vector<AlgMultivector> out;
    for (int a = 0; a < L.k; ++a)
        out.push_back(cobracketExtend(delta, cobracketOf(delta, 0, a)));
    return out;
}

bool isAdInvariant(const LieAlgebraData& L, const AlgMultivector& omega) {
    if (omega.degree() != 3)
        throw std::invalid_argument("expected a trivector");
    if (!omega.isConstant())
        throw std::invalid_argument("expected a constant trivector");
    for (int a = 0; a < L.k; ++a) {
        AlgMultivector ea = AlgMultivector::basisElement(omega.dim(), L.k, {a});
        if (!algSchouten(L, ea, omega).isZero())
            return false;
    }
    return true;
}

DualVector coad(const LieAlgebraData& L, const AlgVector& A, const DualVector& xi) {
    if (static_cast<int>(A.size()) != L.k || static_cast<int>(xi.size()) != L.k)
        throw std::invalid_argument("component count mismatch");
    int dim = A.empty() ? 0 : A[0].dim();
    DualVector out(L.k, ScalarFn(dim));
    // <ad*_A xi, e_b> = -<xi, [A, e_b]> = -sum_{a,d} A^a c_{ab}^d xi_d
    for (int b = 0; b < L.k; ++b)
        for (int a = 0; a < L.k; ++a)
            for (int d = 0; d < L.k; ++d) {
                Rational c = L.structure(a, b, d);
                if (c != 0)
                    out[b] = out[b] - (A[a] * xi[d]).scaled(c);
            }
    return out;
}

std::vector<std::vector<Rational>> center(const LieAlgebraData& L) {
    // z in Z(g) iff sum_a z^a c_{ab}^d = 0 for all b, d.
    const int k = L.k;
    std::vector<std::vector<Rational>> rows;
    for (int b = 0; b < k; ++b)
        for (int d = 0; d < k; ++d) {
            std::vector<Rational> row(k, 0);
            bool nonzero = false;
            for (int a = 0; a < k; ++a) {
                row[a] = L.structure(a, b, d);
                if (row[a] != 0)
                    nonzero = true;
            }
            if (nonzero)
                rows.push_back(std::move(row));
        }
    // Gaussian elimination; the nullspace basis spans the center.
    size_t rank = 0;
    std::vector<int> pivotCol;
    for (int col = 0; col < k && rank < rows.size(); ++col) {
        size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0)
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[rank], rows[pivot]);
        Rational inv = Rational(1) / rows[rank][col];
        for (int j = 0; j < k; ++j)
            rows[rank][j] *= inv;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0)
                continue;
            Rational factor = rows[r][col];
            for (int j = 0; j < k; ++j)
                rows[r][j] -= factor * rows[rank][j];
        }
        pivotCol.push_back(col);
        ++rank;
    }
    std::vector<bool> isPivot(k, false);
    for (int c : pivotCol)
        isPivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (int freeCol = 0; freeCol < k; ++freeCol) {
        if (isPivot[freeCol])
            continue;
        std::vector<Rational> v(k, 0);
        v[freeCol] = 1;
        for (size_t r = 0; r < rank; ++r)
            v[pivotCol[r]] = -rows[r][freeCol];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace liebial
