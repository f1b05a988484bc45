#include "liebial/dual.hpp"

namespace liebial {

namespace {

/// Pairing of a degree <= 1 multivector against a covector.
ScalarFn pairWith(const Multivector& P, const DualSection& phi) {
    return contract(P, phi).coeff({}, {});
}

/// Derivative of g along the tangent part of the degree-one section e.
ScalarFn tangentAction(const Multivector& e, const ScalarFn& g) {
    const int n = e.ctx()->n;
    ScalarFn r(n);
    for (const auto& [k, c] : e.comps())
        if (k.first.size() == 1 && k.second.empty())
            r = r + c * g.derivative(k.first[0]);
    return r;
}

/// (L_e phi)(e') = rho(e)<phi, e'> - <phi, [e, e']> on every generator e'.
DualSection lieDerivCovector(const Multivector& e, const DualSection& phi) {
    const ContextPtr& ctx = phi.ctx;
    DualSection r = DualSection::zero(ctx);
    for (int j = 0; j < ctx->n; ++j)
        r.alpha[j] = tangentAction(e, phi.alpha[j]) -
                     pairWith(schouten(e, Multivector::baseVector(ctx, j)), phi);
    for (int b = 0; b < ctx->k(); ++b) {
        Multivector eb(ctx);
        eb.add({}, {b}, ScalarFn::constant(ctx->n, 1));
        r.xi[b] = tangentAction(e, phi.xi[b]) - pairWith(schouten(e, eb), phi);
    }
    return r;
}

DualSection differentialOf(const ContextPtr& ctx, const ScalarFn& f) {
    DualSection r = DualSection::zero(ctx);
    for (int i = 0; i < ctx->n; ++i)
        r.alpha[i] = f.derivative(i);
    return r;
}

std::string printCovector(const DualSection& phi) {
    const Context& ctx = *phi.ctx;
    std::string out;
    for (int i = 0; i < ctx.n; ++i)
        if (!phi.alpha[i].isZero())
            out += (out.empty() ? "" : " + ") +
                   ("(" + printScalar(phi.alpha[i], ctx.coords) + ")*d" + ctx.coords[i]);
    for (int a = 0; a < ctx.L.k; ++a)
        if (!phi.xi[a].isZero())
            out += (out.empty() ? "" : " + ") +
                   ("(" + printScalar(phi.xi[a], ctx.coords) + ")*" + ctx.L.basisNames[a] + "*");
    return out.empty() ? "0" : out;
}

AlgVector thetaSharpForm(const Quadruple& q, const std::vector<ScalarFn>& alpha) {
    const int n = q.ctx->n, k = q.ctx->k();
    AlgVector out(k, ScalarFn(n));
    for (int a = 0; a < k; ++a)
        for (int i = 0; i < n; ++i)
            out[a] = out[a] + q.theta.comp[i][a] * alpha[i];
    return out;
}

}  // namespace

DualSection lambda_bracket(const Multivector& lambda, const DualSection& phi,
                           const DualSection& psi) {
    if (lambda.ctx() != phi.ctx || phi.ctx != psi.ctx)
        throw std::invalid_argument("context mismatch");
    Multivector lp = contract(lambda, phi);
    Multivector lq = contract(lambda, psi);
    ScalarFn pairing = pairWith(lp, psi);
    return lieDerivCovector(lp, psi) - lieDerivCovector(lq, phi) -
           differentialOf(phi.ctx, pairing);
}

DualSection delta_dual_bracket(const Quadruple& q, const DualSection& phi,
                               const DualSection& psi) {
    DualSection r = DualSection::zero(q.ctx);
    for (const auto& [a, m] : q.delta.d)
        for (const auto& [bc, v] : m) {
            ScalarFn det = phi.xi[bc.first] * psi.xi[bc.second] -
                           phi.xi[bc.second] * psi.xi[bc.first];
            r.xi[a] = r.xi[a] + det.scaled(v);
        }
    return r;
}

DualSection dual_bracket(const Quadruple& q, const DualSection& phi,
                         const DualSection& psi) {
    return lambda_bracket(assemble_lambda(q), phi, psi) + delta_dual_bracket(q, phi, psi);
}

Multivector dual_anchor(const Quadruple& q, const DualSection& phi) {
    DualSection formOnly = DualSection::zero(q.ctx);
    formOnly.alpha = phi.alpha;
    DualSection dualOnly = DualSection::zero(q.ctx);
    dualOnly.xi = phi.xi;
    return contract(q.pi, formOnly) +
           bigrade(contract(theta_to_K(q.theta), dualOnly), 1, 0);
}

DualVector phi_map(const Quadruple& q, const std::vector<ScalarFn>& alpha,
                   const DualVector& xi) {
    const int n = q.ctx->n, k = q.ctx->k();
    DualSection formOnly = DualSection::zero(q.ctx);
    formOnly.alpha = alpha;
    Multivector sharp = contract(q.pi, formOnly);
    std::vector<ScalarFn> X(n, ScalarFn(n));
    for (const auto& [key, c] : sharp.comps())
        X[key.first[0]] = c;
    DualVector out(k, ScalarFn(n));
    for (int b = 0; b < k; ++b)
        for (int m = 0; m < n; ++m)
            out[b] = out[b] + X[m] * xi[b].derivative(m);
    DualVector ad = coad(q.ctx->L, thetaSharpForm(q, alpha), xi);
    for (int b = 0; b < k; ++b)
        out[b] = out[b] + ad[b];
    return out;
}

std::vector<ScalarFn> psi_map(const Quadruple& q, const DualVector& xi,
                              const std::vector<ScalarFn>& alpha) {
    const int n = q.ctx->n, k = q.ctx->k();
    AlgVector sharp = thetaSharpForm(q, alpha);
    std::vector<ScalarFn> out(n, ScalarFn(n));
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < k; ++a)
            out[i] = out[i] - xi[a] * sharp[a].derivative(i);
    // (theta#)* xi = sum theta^{j,a} xi_a d/dx_j
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            ScalarFn Tj(n);
            for (int a = 0; a < k; ++a)
                Tj = Tj + q.theta.comp[j][a] * xi[a];
            out[i] = out[i] - Tj * (alpha[i].derivative(j) - alpha[j].derivative(i));
        }
    return out;
}

Report check_matched_pair(const Quadruple& q) {
    if (!q.tau.isZero())
        throw std::invalid_argument("matched-pair verification requires tau = 0");
    Report rep;
    rep.title = "matched-pair conditions";
    const ContextPtr& ctx = q.ctx;

    bool bialg = checkCocycle(ctx->L, q.delta);
    for (const auto& d2 : deltaSquared(ctx->L, q.delta))
        bialg = bialg && d2.isZero();
    rep.addCondition("lie-bialgebra", "delta is a square-zero 1-cocycle", bialg,
                     bialg ? "0" : "cocycle or square condition violated");

    bool morph = true;
    std::string morphRes = "0";
    for (int a = 0; a < ctx->k() && morph; ++a)
        for (int b = a + 1; b < ctx->k() && morph; ++b) {
            DualSection ea = DualSection::dual(ctx, a);
            DualSection eb = DualSection::dual(ctx, b);
            Multivector lhs = schouten(dual_anchor(q, ea), dual_anchor(q, eb));
            Multivector rhs = dual_anchor(q, delta_dual_bracket(q, ea, eb));
            Multivector res = lhs - rhs;
            if (!res.isZero()) {
                morph = false;
                morphRes = "(" + ctx->L.basisNames[a] + "*," + ctx->L.basisNames[b] +
                           "*): " + printMultivector(res);
            }
        }
    rep.addCondition("dual-anchor-morphism",
                     "the dual anchor is a Lie algebra morphism on g*", morph, morphRes);

    rep.addCondition("poisson-action", "delta theta + (1/2)[theta,theta] = 0",
                     theta_bracket(q.theta).scaled(Rational(1, 2)) -
                         delta_theta(q.theta, q.delta));

    std::vector<DualSection> gens;
    for (int i = 0; i < ctx->n; ++i)
        gens.push_back(DualSection::dx(ctx, i));
    for (int a = 0; a < ctx->k(); ++a)
        gens.push_back(DualSection::dual(ctx, a));
    bool jac = true;
    std::string jacRes = "0";
    for (size_t i = 0; i < gens.size() && jac; ++i)
        for (size_t j = i + 1; j < gens.size() && jac; ++j)
            for (size_t l = j + 1; l < gens.size() && jac; ++l) {
                DualSection J = dual_bracket(q, dual_bracket(q, gens[i], gens[j]), gens[l]) +
                                dual_bracket(q, dual_bracket(q, gens[j], gens[l]), gens[i]) +
                                dual_bracket(q, dual_bracket(q, gens[l], gens[i]), gens[j]);
                if (!J.isZero()) {
                    jac = false;
                    jacRes = printCovector(J);
                }
            }
    rep.addCondition("dual-jacobi", "Jacobi identity of the dual bracket on generators",
                     jac, jacRes);
    return rep;
}

Report dual_differential_suite(const Quadruple& q) {
    Report rep;
    rep.title = "dual differential identities";
    const ContextPtr& ctx = q.ctx;
    const int n = ctx->n, k = ctx->k();

    std::vector<std::pair<std::string, ScalarFn>> fns;
    for (int i = 0; i < n; ++i)
        fns.emplace_back(ctx->coords[i], ScalarFn::variable(n, i));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            fns.emplace_back(ctx->coords[i] + ctx->coords[j],
                             ScalarFn::variable(n, i) * ScalarFn::variable(n, j));

    for (const auto& [name, f] : fns) {
        DualSection df = DualSection::zero(ctx);
        for (int i = 0; i < n; ++i)
            df.alpha[i] = f.derivative(i);

        // d_* f = -pi#(df) - theta#(df)
        Multivector expect = -contract(q.pi, df);
        AlgVector sharp = thetaSharpForm(q, df.alpha);
        for (int a = 0; a < k; ++a)
            expect.add({}, {a}, -sharp[a]);
        rep.addCondition("differential-" + name,
                         "d_* of " + name + " matches -pi#(d.) - theta#(d.)",
                         d_star(q, Multivector::fromScalar(ctx, f)) - expect);

        // [d f, xi]_* = -d(rho_*(xi) f) + ad*_{theta#(df)} xi
        for (int a = 0; a < k; ++a) {
            DualSection xi = DualSection::dual(ctx, a);
            DualSection lhs = dual_bracket(q, df, xi);
            Multivector anchor = dual_anchor(q, xi);
            ScalarFn anchored(n);
            for (const auto& [key, c] : anchor.comps())
                anchored = anchored + c * f.derivative(key.first[0]);
            DualSection rhs = -differentialOf(ctx, anchored);
            rhs.xi = coad(ctx->L, sharp, xi.xi);
            DualSection res = lhs - rhs;
            rep.addCondition("mixed-bracket-" + name + "-" + ctx->L.basisNames[a],
                             "bracket of d" + name + " with " + ctx->L.basisNames[a] + "*",
                             res.isZero(), printCovector(res));
        }
    }
    return rep;
}

}  // namespace liebial
