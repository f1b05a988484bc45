#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "liebial/bialgebroid.hpp"

using namespace liebial;

namespace {

const int H = 0, EP = 1, EM = 2;

Multivector mono(const ContextPtr& ctx, std::vector<int> base, std::vector<int> alg,
                 ScalarFn c) {
    Multivector m(ctx);
    m.add(std::move(base), std::move(alg), c);
    return m;
}

Multivector mono(const ContextPtr& ctx, std::vector<int> base, std::vector<int> alg,
                 const Rational& c = 1) {
    return mono(ctx, std::move(base), std::move(alg), ScalarFn::constant(ctx->n, c));
}

/// Plane/sl2 instance with pi = dx^dy duals, theta = (d/dx + d/dy) (x) H and
/// the exponentially weighted tau; passes every verifier.
Quadruple instanceS() {
    auto ctx = makeContext(2, {"x", "y"}, LieAlgebraData::sl2());
    Quadruple q = Quadruple::zero(ctx);
    q.pi.add({0, 1}, {}, ScalarFn::constant(2, 1));
    q.theta.set(0, H, ScalarFn::constant(2, 1));
    q.theta.set(1, H, ScalarFn::constant(2, 1));
    q.tau.add({H, EP}, ScalarFn::exponential(2, {1, -1}));
    q.tau.add({H, EM}, ScalarFn::exponential(2, {-1, 1}));
    q.tau.add({EP, EM}, ScalarFn::constant(2, 1));
    return q;
}

/// Point-base sl2 Lie bialgebra with the coboundary cobracket of E+^E-.
Quadruple instanceB() {
    auto ctx = makeContext(0, {}, LieAlgebraData::sl2());
    Quadruple q = Quadruple::zero(ctx);
    AlgMultivector r0(0, 2);
    r0.add({EP, EM}, ScalarFn::constant(0, 1));
    q.delta = coboundaryCobracket(ctx->L, r0);
    return q;
}

/// Rational dynamical instance on the line: theta = d/dlambda (x) H,
/// tau = (c/lambda) E+^E- with the calibrated constant c.
Quadruple instanceF(const Rational& c = Rational(-1, 2)) {
    auto ctx = makeContext(1, {"lambda"}, LieAlgebraData::sl2());
    Quadruple q = Quadruple::zero(ctx);
    q.theta.set(0, H, ScalarFn::constant(1, 1));
    ScalarFn coeff = ScalarFn::constant(1, c) / ScalarFn::variable(1, 0);
    q.tau.add({EP, EM}, coeff);
    return q;
}

/// Line instance with tau = 0 and the coboundary cobracket: the matched-pair
/// configuration.
Quadruple instanceM() {
    auto ctx = makeContext(1, {"lambda"}, LieAlgebraData::sl2());
    Quadruple q = Quadruple::zero(ctx);
    q.theta.set(0, H, ScalarFn::constant(1, 1));
    AlgMultivector r0(1, 2);
    r0.add({EP, EM}, ScalarFn::constant(1, 1));
    q.delta = coboundaryCobracket(ctx->L, r0);
    return q;
}

Quadruple brokenS() {
    Quadruple q = instanceS();
    q.tau.add({H, EP}, ScalarFn::constant(2, 1));
    return q;
}

ScalarFn randomCoeff(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> coef(-2, 2);
    ScalarFn f = ScalarFn::constant(n, coef(rng));
    int kind = std::uniform_int_distribution<int>(0, 2)(rng);
    if (kind == 1 && n > 0)
        f = f + ScalarFn::variable(n, std::uniform_int_distribution<int>(0, n - 1)(rng));
    else if (kind == 2 && n > 0)
        f = f * ScalarFn::exponential(n, std::vector<Rational>(n, 1));
    return f;
}

Quadruple randomQuadruple(std::mt19937& rng) {
    auto ctx = makeContext(2, {"x", "y"}, LieAlgebraData::sl2());
    Quadruple q = Quadruple::zero(ctx);
    q.pi.add({0, 1}, {}, randomCoeff(rng, 2));
    for (int i = 0; i < 2; ++i)
        for (int a = 0; a < 3; ++a)
            if (std::uniform_int_distribution<int>(0, 1)(rng) == 0)
                q.theta.set(i, a, randomCoeff(rng, 2));
    q.tau.add({H, EP}, randomCoeff(rng, 2));
    q.tau.add({H, EM}, randomCoeff(rng, 2));
    q.tau.add({EP, EM}, randomCoeff(rng, 2));
    std::uniform_int_distribution<int> dv(-2, 2);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = b + 1; c < 3; ++c) {
                Rational v = dv(rng);
                if (v != 0)
                    q.delta.d[a][{b, c}] = v;
            }
    return q;
}

AlgMultivector randomR0(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> coef(-2, 2);
    AlgMultivector r0(n, 2);
    r0.add({H, EP}, ScalarFn::constant(n, coef(rng)));
    r0.add({H, EM}, ScalarFn::constant(n, coef(rng)));
    r0.add({EP, EM}, ScalarFn::constant(n, coef(rng)));
    return r0;
}

std::vector<Multivector> generatorSections(const ContextPtr& ctx) {
    std::vector<Multivector> gens;
    for (int i = 0; i < ctx->n; ++i) {
        gens.push_back(Multivector::fromScalar(ctx, ScalarFn::variable(ctx->n, i)));
        gens.push_back(Multivector::baseVector(ctx, i));
    }
    for (int a = 0; a < ctx->k(); ++a)
        gens.push_back(mono(ctx, {}, {a}));
    if (ctx->n >= 1 && ctx->k() >= 2) {
        gens.push_back(mono(ctx, {0}, {H, EP}));
        gens.push_back(mono(ctx, {0}, {EM}, ScalarFn::variable(ctx->n, 0)));
    }
    return gens;
}

}  // namespace

TEST_CASE("lambda assembly and bigrade recovery") {
    auto ctx = makeContext(2, {"x", "y"}, LieAlgebraData::sl2());
    CHECK(assemble_lambda(Quadruple::zero(ctx)).isZero());

    Quadruple S = instanceS();
    Multivector lambda = assemble_lambda(S);
    CHECK(bigrade(lambda, 2, 0) == S.pi);
    CHECK(bigrade(lambda, 1, 1) == theta_to_K(S.theta));
    CHECK(bigrade(lambda, 0, 2) == Multivector::algElement(S.ctx, S.tau));
}

TEST_CASE("delta extension is an odd derivation over mixed factors") {
    Quadruple M = instanceM();
    // delta(d/dlambda ^ E+) = -d/dlambda ^ delta(E+) = -d/dlambda ^ (-2 H^E+)
    Multivector P = mono(M.ctx, {0}, {EP});
    CHECK(delta_extend(M.delta, P) == mono(M.ctx, {0}, {H, EP}, Rational(2)));
    CHECK(delta_extend(M.delta, mono(M.ctx, {0}, {H})).isZero());
}

TEST_CASE("obstruction components of the exp-weighted instance all vanish") {
    TComponents t = t_components(instanceS());
    CHECK(t.t30.isZero());
    CHECK(t.t21.isZero());
    CHECK(t.t12.isZero());
    CHECK(t.t03.isZero());
}

TEST_CASE("non-Poisson bivector is caught in the (3,0) component") {
    auto ctx = makeContext(3, {"x", "y", "z"}, LieAlgebraData::sl2());
    Quadruple q = Quadruple::zero(ctx);
    q.pi.add({0, 1}, {}, ScalarFn::constant(3, 1));
    q.pi.add({0, 2}, {}, ScalarFn::variable(3, 0));
    CHECK_FALSE(t_components(q).t30.isZero());
    CHECK_FALSE(verify_transitive(q).pass());
}

TEST_CASE("dual-path equality of the obstruction, randomized") {
    std::mt19937 rng(101);
    for (int trial = 0; trial < 6; ++trial) {
        Quadruple q = randomQuadruple(rng);
        Multivector lambda = assemble_lambda(q);
        Multivector T = delta_extend(q.delta, lambda) +
                        schouten(lambda, lambda).scaled(Rational(1, 2));
        TComponents t = t_components(q);
        CHECK(bigrade(T, 3, 0) == t.t30);
        CHECK(bigrade(T, 2, 1) == t.t21);
        CHECK(bigrade(T, 1, 2) == t.t12);
        CHECK(bigrade(T, 0, 3) == t.t03);
        CHECK(t.t30 + t.t21 + t.t12 + t.t03 == T);
    }
}

TEST_CASE("transitive verifier on reference instances") {
    CHECK(verify_transitive(instanceB()).pass());
    CHECK(verify_transitive(instanceS()).pass());
    CHECK(verify_transitive(instanceM()).pass());

    Report bad = verify_transitive(brokenS());
    CHECK_FALSE(bad.pass());
    bool mixedFailed = false;
    for (const auto& c : bad.conditions)
        if (c.id == "mixed-compat")
            mixedFailed = !c.pass;
    CHECK(mixedFailed);
}

TEST_CASE("coboundary verifier") {
    Report s = verify_coboundary(instanceS());
    CHECK(s.pass());
    REQUIRE(!s.notes.empty());
    CHECK(s.notes[0] == "Omega = 0");

    // tau = theta = 0, pi Poisson
    auto ctx = makeContext(2, {"x", "y"}, LieAlgebraData::sl2());
    Quadruple q = Quadruple::zero(ctx);
    q.pi.add({0, 1}, {}, ScalarFn::variable(2, 0));
    CHECK(verify_coboundary(q).pass());

    CHECK(verify_coboundary(instanceF()).pass());
    CHECK_FALSE(verify_coboundary(instanceF(1)).pass());
    CHECK_FALSE(verify_coboundary(instanceF(Rational(1, 2))).pass());

    CHECK_THROWS_AS(verify_coboundary(instanceM()), std::invalid_argument);
}

TEST_CASE("calibration sweep for the rational dynamical constant") {
    // Of c in {1, -1, 2, -2, 1/2, -1/2, 0} only c = -1/2 and c = 0 make the
    // line instance pass; c = 0 is the degenerate tau = 0 case.
    std::vector<Rational> pass;
    for (Rational c : {Rational(1), Rational(-1), Rational(2), Rational(-2),
                       Rational(1, 2), Rational(-1, 2), Rational(0)})
        if (verify_coboundary(instanceF(c)).pass())
            pass.push_back(c);
    CHECK(pass == std::vector<Rational>{Rational(1, 2) * -1, Rational(0)});
}

TEST_CASE("gauge transformation basics") {
    Quadruple B = instanceB();
    AlgMultivector zero(0, 2);
    Quadruple same = gauge_transform(B, zero);
    CHECK(same.tau == B.tau);
    CHECK(same.delta.d == B.delta.d);

    AlgMultivector r0(0, 2);
    r0.add({EP, EM}, ScalarFn::constant(0, 1));
    Quadruple fwd = gauge_transform(B, r0);
    Quadruple back = gauge_transform(fwd, -r0);
    CHECK(back.tau == B.tau);
    CHECK(back.delta.d == B.delta.d);

    AlgMultivector bad(0, 2);
    bad.add({EP, EM}, ScalarFn::constant(0, 1));
    Quadruple S = instanceS();
    CHECK_THROWS_AS(gauge_transform(S, bad), std::invalid_argument);  // dim mismatch
    AlgMultivector nonconst(2, 2);
    nonconst.add({EP, EM}, ScalarFn::variable(2, 0));
    CHECK_THROWS_AS(gauge_transform(S, nonconst), std::invalid_argument);
}

TEST_CASE("gauge transformations leave d_star unchanged, randomized") {
    std::mt19937 rng(103);
    for (Quadruple q : {instanceS(), instanceM()}) {
        auto gens = generatorSections(q.ctx);
        for (int trial = 0; trial < 5; ++trial) {
            Quadruple g = gauge_transform(q, randomR0(rng, q.ctx->n));
            for (const auto& S : gens)
                CHECK(d_star(g, S) == d_star(q, S));
        }
    }
}

TEST_CASE("gauged instances keep their verifier verdict") {
    std::mt19937 rng(107);
    Quadruple S = instanceS();
    for (int trial = 0; trial < 4; ++trial) {
        Quadruple g = gauge_transform(S, randomR0(rng, 2));
        CHECK(verify_transitive(g).pass());
        CHECK(check_master(g).pass());
    }
}

TEST_CASE("d_star on reference data") {
    Quadruple S = instanceS();
    Multivector x = Multivector::fromScalar(S.ctx, ScalarFn::variable(2, 0));
    // d_* x = -pi#(dx) - theta#(dx) = -d/dy - H
    Multivector expect(S.ctx);
    expect.add({1}, {}, ScalarFn::constant(2, -1));
    expect.add({}, {H}, ScalarFn::constant(2, -1));
    CHECK(d_star(S, x) == expect);

    CHECK(d_star(S, Multivector::fromScalar(S.ctx, ScalarFn::constant(2, 1))).isZero());

    Quadruple B = instanceB();
    Multivector ep(B.ctx);
    ep.add({}, {EP}, ScalarFn::constant(0, 1));
    CHECK(d_star(B, ep) == mono(B.ctx, {}, {H, EP}, Rational(-2)));
}

TEST_CASE("square-zero oracle agrees with the verifier") {
    CHECK(check_master(instanceB()).pass());
    CHECK(check_master(instanceS()).pass());
    CHECK(check_master(instanceM()).pass());
    CHECK(check_master(instanceF()).pass());
    CHECK_FALSE(check_master(brokenS()).pass());
    CHECK_FALSE(check_master(instanceF(1)).pass());
}

TEST_CASE("verifier and oracle verdicts match on randomized quadruples") {
    std::mt19937 rng(109);
    int agreements = 0;
    for (int trial = 0; trial < 8; ++trial) {
        Quadruple q = randomQuadruple(rng);
        bool v = verify_transitive(q).pass();
        bool m = check_master(q).pass();
        CHECK(v == m);
        agreements += (v == m);
    }
    CHECK(agreements == 8);
}

TEST_CASE("Hamiltonian-tau conditions") {
    Report m = check_hamiltonian_tau(instanceM());
    CHECK(m.pass());

    Report s = check_hamiltonian_tau(instanceS());
    CHECK(s.pass());

    Report broken = check_hamiltonian_tau(brokenS());
    CHECK_FALSE(broken.pass());
}

TEST_CASE("degree-three obstruction vanishes identically on small ranks") {
    std::mt19937 rng(113);
    auto ctx = makeContext(2, {"x", "y"}, LieAlgebraData::abelian(0));
    for (int trial = 0; trial < 5; ++trial) {
        Quadruple q = Quadruple::zero(ctx);
        q.pi.add({0, 1}, {}, randomCoeff(rng, 2));
        TComponents t = t_components(q);
        CHECK(t.t30.isZero());
        CHECK(t.t21.isZero());
        CHECK(t.t12.isZero());
        CHECK(t.t03.isZero());
    }
}

TEST_CASE("reports carry printable residuals") {
    Report bad = verify_transitive(brokenS());
    for (const auto& c : bad.conditions)
        if (!c.pass)
            CHECK(c.residual != "0");
    Report good = verify_transitive(instanceS());
    for (const auto& c : good.conditions) {
        CHECK(c.pass);
        CHECK(c.residual == "0");
    }
}
