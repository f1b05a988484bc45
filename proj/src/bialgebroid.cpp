#include "liebial/bialgebroid.hpp"

namespace liebial {

Quadruple Quadruple::zero(ContextPtr ctx) {
    Quadruple q;
    q.pi = Multivector(ctx);
    q.theta = Theta::zero(ctx);
    q.tau = AlgMultivector(ctx->n, 2);
    q.delta.k = ctx->k();
    q.ctx = std::move(ctx);
    return q;
}

bool Report::pass() const {
    for (const auto& c : conditions)
        if (!c.pass)
            return false;
    return true;
}

void Report::addCondition(std::string id, std::string ref, const Multivector& residual) {
    addCondition(std::move(id), std::move(ref), residual.isZero(), printMultivector(residual));
}

void Report::addCondition(std::string id, std::string ref, bool ok, std::string residual) {
    conditions.push_back({std::move(id), std::move(ref), ok, std::move(residual)});
}

Multivector assemble_lambda(const Quadruple& q) {
    return q.pi + theta_to_K(q.theta) + Multivector::algElement(q.ctx, q.tau);
}

Multivector delta_extend(const Cobracket& delta, const Multivector& P) {
    Multivector r(P.ctx());
    const int n = P.ctx()->n;
    for (const auto& [k, c] : P.comps()) {
        const int p = static_cast<int>(k.first.size());
        for (size_t j = 0; j < k.second.size(); ++j) {
            AlgMultivector dj = cobracketOf(delta, n, k.second[j]);
            for (const auto& [bc, v] : dj.comps()) {
                std::vector<int> alg;
                alg.insert(alg.end(), k.second.begin(), k.second.begin() + j);
                alg.push_back(bc[0]);
                alg.push_back(bc[1]);
                alg.insert(alg.end(), k.second.begin() + j + 1, k.second.end());
                ScalarFn coeff = c * v;
                if ((p + static_cast<int>(j)) % 2 != 0)
                    coeff = -coeff;
                r.add(k.first, std::move(alg), coeff);
            }
        }
    }
    return r;
}

Multivector pi_sharp_dtau(const Multivector& pi, const AlgMultivector& tau) {
    const ContextPtr& ctx = pi.ctx();
    Multivector r(ctx);
    for (int i = 0; i < ctx->n; ++i) {
        AlgMultivector dtau = tau.derivative(i);
        if (dtau.isZero())
            continue;
        Multivector sharp = contract(pi, Covector::dx(ctx, i));
        r = r + wedge(sharp, Multivector::algElement(ctx, dtau));
    }
    return r;
}

TComponents t_components(const Quadruple& q) {
    TComponents t;
    t.t30 = schouten(q.pi, q.pi).scaled(Rational(1, 2));
    t.t21 = d_pi(q.theta, q.pi) + theta_wedge(q.theta);
    t.t12 = -delta_theta(q.theta, q.delta) - tau_theta_bracket(q.tau, q.theta) +
            theta_bracket(q.theta).scaled(Rational(1, 2)) - pi_sharp_dtau(q.pi, q.tau);
    AlgMultivector t03alg = cobracketExtend(q.delta, q.tau) +
                            algSchouten(q.ctx->L, q.tau, q.tau).scaled(Rational(1, 2)) -
                            alt_theta_dtau(q.theta, q.tau);
    t.t03 = Multivector::algElement(q.ctx, t03alg);
    return t;
}

AlgMultivector algPart(const Multivector& P, int qdeg) {
    AlgMultivector r(P.ctx()->n, qdeg);
    for (const auto& [k, c] : P.comps()) {
        if (!k.first.empty() || static_cast<int>(k.second.size()) != qdeg)
            throw std::invalid_argument("not a pure-algebra section of the requested degree");
        r.add(k.second, c);
    }
    return r;
}

namespace {

/// Residual of the cocycle condition for the pair (a, b), as a printable
/// mixed section.
Multivector cocycleResidual(const Quadruple& q, int a, int b) {
    const ContextPtr& ctx = q.ctx;
    const LieAlgebraData& L = ctx->L;
    AlgMultivector lhs(ctx->n, 2);
    for (int d = 0; d < L.k; ++d) {
        Rational c = L.structure(a, b, d);
        if (c != 0)
            lhs = lhs + cobracketOf(q.delta, ctx->n, d).scaled(c);
    }
    AlgMultivector ea = AlgMultivector::basisElement(ctx->n, L.k, {a});
    AlgMultivector eb = AlgMultivector::basisElement(ctx->n, L.k, {b});
    AlgMultivector rhs = algSchouten(L, ea, cobracketOf(q.delta, ctx->n, b)) -
                         algSchouten(L, eb, cobracketOf(q.delta, ctx->n, a));
    return Multivector::algElement(ctx, lhs - rhs);
}

void addCocycleCondition(Report& rep, const Quadruple& q) {
    const int k = q.ctx->k();
    bool ok = true;
    std::string residual = "0";
    for (int a = 0; a < k && ok; ++a)
        for (int b = a + 1; b < k && ok; ++b) {
            Multivector r = cocycleResidual(q, a, b);
            if (!r.isZero()) {
                ok = false;
                residual = "(" + q.ctx->L.basisNames[a] + "," + q.ctx->L.basisNames[b] +
                           "): " + printMultivector(r);
            }
        }
    rep.addCondition("1-cocycle", "delta is a 1-cocycle of the algebra", ok, residual);
}

void addConstancyCondition(Report& rep, const std::string& id, const std::string& ref,
                           const Multivector& P) {
    const ContextPtr& ctx = P.ctx();
    for (int i = 0; i < ctx->n; ++i) {
        Multivector d(ctx);
        for (const auto& [k, c] : P.comps())
            d.add(k.first, k.second, c.derivative(i));
        if (!d.isZero()) {
            rep.addCondition(id, ref, false,
                             "d/d" + ctx->coords[i] + ": " + printMultivector(d));
            return;
        }
    }
    rep.addCondition(id, ref, true, "0");
}

void addCoJacobiCondition(Report& rep, const Quadruple& q, const Multivector& t03) {
    const ContextPtr& ctx = q.ctx;
    AlgMultivector t03alg = algPart(t03, 3);
    std::vector<AlgMultivector> d2 = deltaSquared(ctx->L, q.delta);
    for (int a = 0; a < ctx->k(); ++a) {
        // delta^2 values live over a zero-dimensional base; lift them.
        AlgMultivector d2a(ctx->n, 3);
        for (const auto& [idx, v] : d2[a].comps()) {
            Rational r;
            v.constantValue(&r);
            d2a.add(idx, ScalarFn::constant(ctx->n, r));
        }
        AlgMultivector ea = AlgMultivector::basisElement(ctx->n, ctx->k(), {a});
        AlgMultivector res = d2a + algSchouten(ctx->L, t03alg, ea);
        if (!res.isZero()) {
            rep.addCondition("co-jacobi", "delta^2 + [T03, .] vanishes on the algebra", false,
                             ctx->L.basisNames[a] + ": " +
                                 printMultivector(Multivector::algElement(ctx, res)));
            return;
        }
    }
    rep.addCondition("co-jacobi", "delta^2 + [T03, .] vanishes on the algebra", true, "0");
}

}  // namespace

Report verify_transitive(const Quadruple& q) {
    Report rep;
    rep.title = "transitive structure conditions";
    TComponents t = t_components(q);
    addCocycleCondition(rep, q);
    rep.addCondition("poisson-tensor", "[pi, pi] = 0", schouten(q.pi, q.pi));
    rep.addCondition("algebroid-morphism", "d_pi theta + theta^theta = 0", t.t21);
    rep.addCondition("mixed-compat", "the (1,2) component of the obstruction vanishes", t.t12);
    addConstancyCondition(rep, "invariant-constant",
                          "the (0,3) obstruction is constant on the base", t.t03);
    addCoJacobiCondition(rep, q, t.t03);
    return rep;
}

Report verify_coboundary(const Quadruple& q) {
    if (!q.delta.isZero())
        throw std::invalid_argument("coboundary verification requires a zero cobracket");
    Report rep;
    rep.title = "coboundary structure conditions";
    TComponents t = t_components(q);
    rep.addCondition("poisson-tensor", "[pi, pi] = 0", schouten(q.pi, q.pi));
    rep.addCondition("algebroid-morphism", "d_pi theta + theta^theta = 0", t.t21);
    rep.addCondition("bracket-compat",
                     "(1/2)[theta,theta] matches the tau/pi coupling", t.t12);
    addConstancyCondition(rep, "omega-constant", "Omega is constant on the base", t.t03);
    AlgMultivector omega = algPart(t.t03, 3);
    bool invariant = omega.isZero() ||
                     (omega.isConstant() && isAdInvariant(q.ctx->L, omega));
    rep.addCondition("omega-invariant", "Omega is ad-invariant", invariant,
                     invariant ? "0" : printMultivector(t.t03));
    rep.notes.push_back("Omega = " + printMultivector(t.t03));
    return rep;
}

Quadruple gauge_transform(const Quadruple& q, const AlgMultivector& r0) {
    if (!r0.isConstant())
        throw std::invalid_argument("gauge generator must be constant");
    if (r0.degree() != 2 || r0.dim() != q.ctx->n)
        throw std::invalid_argument("gauge generator must be an algebra bivector");
    Quadruple out = q;
    out.tau = q.tau + r0;
    Cobracket shift = coboundaryCobracket(q.ctx->L, r0);
    for (const auto& [a, m] : shift.d)
        for (const auto& [bc, v] : m) {
            Rational& slot = out.delta.d[a][bc];
            slot += v;
            if (slot == 0)
                out.delta.d[a].erase(bc);
        }
    return out;
}

Multivector d_star(const Quadruple& q, const Multivector& S) {
    return schouten(assemble_lambda(q), S) + delta_extend(q.delta, S);
}

Report check_master(const Quadruple& q) {
    Report rep;
    rep.title = "square-zero oracle for d_*";
    const ContextPtr& ctx = q.ctx;
    auto probe = [&](const std::string& name, const Multivector& S) {
        Multivector r = d_star(q, d_star(q, S));
        rep.addCondition("dstar2-" + name, "d_*^2 vanishes on " + name, r);
    };
    for (int i = 0; i < ctx->n; ++i)
        probe(ctx->coords[i],
              Multivector::fromScalar(ctx, ScalarFn::variable(ctx->n, i)));
    for (int i = 0; i < ctx->n; ++i)
        probe("@" + ctx->coords[i], Multivector::baseVector(ctx, i));
    for (int a = 0; a < ctx->k(); ++a) {
        Multivector ea(ctx);
        ea.add({}, {a}, ScalarFn::constant(ctx->n, 1));
        probe(ctx->L.basisNames[a], ea);
    }
    return rep;
}

Report check_hamiltonian_tau(const Quadruple& q) {
    Report rep;
    rep.title = "Hamiltonian-tau conditions";
    const ContextPtr& ctx = q.ctx;

    Multivector r34 = theta_bracket(q.theta).scaled(Rational(1, 2)) -
                      delta_theta(q.theta, q.delta);
    rep.addCondition("cobracket-morphism", "delta theta + (1/2)[theta,theta] = 0", r34);

    Multivector r35 = tau_theta_bracket(q.tau, q.theta) + pi_sharp_dtau(q.pi, q.tau);
    rep.addCondition("tau-compat", "[tau, theta] - pi#(d tau) = 0", r35);

    bool sq = true;
    std::string sqres = "0";
    std::vector<AlgMultivector> d2 = deltaSquared(ctx->L, q.delta);
    for (int a = 0; a < ctx->k() && sq; ++a)
        if (!d2[a].isZero()) {
            sq = false;
            sqres = ctx->L.basisNames[a];
        }
    rep.addCondition("cobracket-square", "delta^2 = 0", sq, sqres);

    rep.addCondition("dybe", "the (0,3) obstruction vanishes", t_components(q).t03);

    for (int i = 0; i < ctx->n; ++i) {
        Multivector X = contract(q.pi, Covector::dx(ctx, i));
        AlgMultivector xtau(ctx->n, 2);
        std::vector<ScalarFn> Xc(ctx->n, ScalarFn(ctx->n));
        for (const auto& [k, c] : X.comps())
            Xc[k.first[0]] = c;
        for (const auto& [idx, c] : q.tau.comps()) {
            ScalarFn d(ctx->n);
            for (int m = 0; m < ctx->n; ++m)
                d = d + Xc[m] * c.derivative(m);
            xtau.add(idx, d);
        }
        AlgMultivector res =
            xtau + algSchouten(ctx->L, q.theta.sharpDx(i), q.tau);
        rep.addCondition("equivariance-" + ctx->coords[i],
                         "Hamiltonian flow of " + ctx->coords[i] +
                             " matches the algebra action on tau",
                         Multivector::algElement(ctx, res));
    }
    return rep;
}

}  // namespace liebial
