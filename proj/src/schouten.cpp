#include "liebial/schouten.hpp"

namespace liebial {

Theta Theta::zero(ContextPtr ctx) {
    Theta t;
    t.comp.assign(ctx->n, std::vector<ScalarFn>(ctx->k(), ScalarFn(ctx->n)));
    t.ctx = std::move(ctx);
    return t;
}

void Theta::set(int i, int a, const ScalarFn& f) { comp[i][a] = f; }

AlgMultivector Theta::sharpDx(int i) const {
    AlgMultivector r(ctx->n, 1);
    for (int a = 0; a < ctx->k(); ++a)
        r.add({a}, comp[i][a]);
    return r;
}

namespace {

Multivector monoOf(const ContextPtr& ctx, std::vector<int> base, std::vector<int> alg,
                   const ScalarFn& c) {
    Multivector m(ctx);
    m.add(std::move(base), std::move(alg), c);
    return m;
}

/// [S1 ^ T1 with coefficient f, S2 ^ T2 with coefficient g] by structural
/// recursion: degree-one base cases, then the split rule
/// [u ^ R, Q] = u ^ [R, Q] + (-1)^{(q-1)(p-1)} [u, Q] ^ R.
Multivector bracketMono(const ContextPtr& ctx, const std::vector<int>& S1,
                        const std::vector<int>& T1, const ScalarFn& f,
                        const std::vector<int>& S2, const std::vector<int>& T2,
                        const ScalarFn& g) {
    const int p = static_cast<int>(S1.size() + T1.size());
    const int q = static_cast<int>(S2.size() + T2.size());
    const int n = ctx->n;

    if (p == 0) {
        if (q == 0)
            return Multivector(ctx);
        // [f, Q] = -(-1)^{q-1} [Q, f]
        Multivector r = bracketMono(ctx, S2, T2, g, {}, {}, f);
        return q % 2 == 0 ? r : -r;
    }
    if (p == 1 && q == 0) {
        // [X, g] = X(g); algebra directions act trivially on functions.
        if (S1.empty())
            return Multivector(ctx);
        return monoOf(ctx, {}, {}, f * g.derivative(S1[0]));
    }
    if (p == 1 && q == 1) {
        Multivector r(ctx);
        if (!S1.empty() && !S2.empty()) {
            int i = S1[0], j = S2[0];
            r.add({j}, {}, f * g.derivative(i));
            r.add({i}, {}, -(g * f.derivative(j)));
        } else if (!S1.empty() && S2.empty()) {
            r.add({}, T2, f * g.derivative(S1[0]));
        } else if (S1.empty() && !S2.empty()) {
            r.add({}, T1, -(g * f.derivative(S2[0])));
        } else {
            ScalarFn fg = f * g;
            for (int d = 0; d < ctx->k(); ++d) {
                Rational c = ctx->L.structure(T1[0], T2[0], d);
                if (c != 0)
                    r.add({}, {d}, fg.scaled(c));
            }
        }
        return r;
    }
    ScalarFn one = ScalarFn::constant(n, 1);
    if (p == 1) {
        // [u, v ^ Q'] = [u, v] ^ Q' + v ^ [u, Q']
        std::vector<int> vb, va, rb = S2, ra = T2;
        if (!S2.empty()) {
            vb = {S2[0]};
            rb.erase(rb.begin());
        } else {
            va = {T2[0]};
            ra.erase(ra.begin());
        }
        Multivector term1 = wedge(bracketMono(ctx, S1, T1, f, vb, va, one),
                                  monoOf(ctx, rb, ra, g));
        Multivector term2 = wedge(monoOf(ctx, vb, va, one),
                                  bracketMono(ctx, S1, T1, f, rb, ra, g));
        return term1 + term2;
    }
    // p >= 2: split off the first factor of P, coefficient stays on the rest.
    std::vector<int> ub, ua, rb = S1, ra = T1;
    if (!S1.empty()) {
        ub = {S1[0]};
        rb.erase(rb.begin());
    } else {
        ua = {T1[0]};
        ra.erase(ra.begin());
    }
    Multivector term1 = wedge(monoOf(ctx, ub, ua, one),
                              bracketMono(ctx, rb, ra, f, S2, T2, g));
    Multivector term2 = wedge(bracketMono(ctx, ub, ua, one, S2, T2, g),
                              monoOf(ctx, rb, ra, f));
    if (((q - 1) * (p - 1)) % 2 != 0)
        term2 = -term2;
    return term1 + term2;
}

}  // namespace

Multivector schouten(const Multivector& P, const Multivector& Q) {
    if (P.ctx() != Q.ctx())
        throw std::invalid_argument("context mismatch");
    Multivector r(P.ctx());
    for (const auto& [kp, f] : P.comps())
        for (const auto& [kq, g] : Q.comps())
            r = r + bracketMono(P.ctx(), kp.first, kp.second, f, kq.first, kq.second, g);
    return r;
}

Multivector theta_to_K(const Theta& theta) {
    Multivector K(theta.ctx);
    for (int i = 0; i < theta.ctx->n; ++i)
        for (int a = 0; a < theta.ctx->k(); ++a)
            K.add({i}, {a}, theta.comp[i][a]);
    return K;
}

Multivector d_pi(const Theta& theta, const Multivector& pi) {
    return schouten(pi, theta_to_K(theta));
}

Multivector theta_bracket(const Theta& theta) {
    const ContextPtr& ctx = theta.ctx;
    Multivector r(ctx);
    // ordered pairs of decomposed terms X_{i,a} = theta^{i,a} d/dx_i
    for (int i = 0; i < ctx->n; ++i)
        for (int a = 0; a < ctx->k(); ++a)
            for (int j = 0; j < ctx->n; ++j)
                for (int b = 0; b < ctx->k(); ++b) {
                    const ScalarFn& fi = theta.comp[i][a];
                    const ScalarFn& fj = theta.comp[j][b];
                    if (fi.isZero() || fj.isZero())
                        continue;
                    // [f d/dx_i, g d/dx_j] = f g' d/dx_j - g f' d/dx_i
                    r.add({j}, {a, b}, fi * fj.derivative(i));
                    r.add({i}, {a, b}, -(fj * fi.derivative(j)));
                }
    return r;
}

Multivector theta_wedge(const Theta& theta) {
    const ContextPtr& ctx = theta.ctx;
    Multivector r(ctx);
    for (int i = 0; i < ctx->n; ++i)
        for (int a = 0; a < ctx->k(); ++a)
            for (int j = 0; j < ctx->n; ++j)
                for (int b = 0; b < ctx->k(); ++b) {
                    ScalarFn fg = theta.comp[i][a] * theta.comp[j][b];
                    if (fg.isZero())
                        continue;
                    for (int d = 0; d < ctx->k(); ++d) {
                        Rational c = ctx->L.structure(a, b, d);
                        if (c != 0)
                            r.add({i, j}, {d}, fg.scaled(c / 2));
                    }
                }
    return r;
}

Multivector delta_theta(const Theta& theta, const Cobracket& delta) {
    const ContextPtr& ctx = theta.ctx;
    Multivector r(ctx);
    for (int i = 0; i < ctx->n; ++i)
        for (int a = 0; a < ctx->k(); ++a) {
            const ScalarFn& f = theta.comp[i][a];
            if (f.isZero())
                continue;
            AlgMultivector da = cobracketOf(delta, ctx->n, a);
            for (const auto& [bc, v] : da.comps())
                r.add({i}, bc, f * v);
        }
    return r;
}

Multivector tau_theta_bracket(const AlgMultivector& tau, const Theta& theta) {
    const ContextPtr& ctx = theta.ctx;
    Multivector r(ctx);
    for (int a = 0; a < ctx->k(); ++a) {
        AlgMultivector ea = AlgMultivector::basisElement(ctx->n, ctx->k(), {a});
        AlgMultivector ta = algSchouten(ctx->L, tau, ea);
        if (ta.isZero())
            continue;
        for (int i = 0; i < ctx->n; ++i) {
            const ScalarFn& f = theta.comp[i][a];
            if (f.isZero())
                continue;
            for (const auto& [idx, c] : ta.comps())
                r.add({i}, idx, f * c);
        }
    }
    return r;
}

AlgMultivector alt_theta_dtau(const Theta& theta, const AlgMultivector& tau) {
    AlgMultivector r(theta.ctx->n, 3);
    for (int i = 0; i < theta.ctx->n; ++i)
        r = r + theta.sharpDx(i).wedge(tau.derivative(i));
    return r;
}

}  // namespace liebial
