#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "liebial/multivector.hpp"

using namespace liebial;

namespace {

const int H = 0, EP = 1, EM = 2;

ContextPtr planeSl2() {
    return makeContext(2, {"x", "y"}, LieAlgebraData::sl2());
}

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

/// Random homogeneous element of total degree d over the plane/sl2 context.
Multivector randomHomogeneous(std::mt19937& rng, const ContextPtr& ctx, int d) {
    std::uniform_int_distribution<int> coef(-2, 2), nterms(1, 3);
    Multivector m(ctx);
    int terms = nterms(rng);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> pool;
        for (int i = 0; i < ctx->n; ++i)
            pool.push_back(i);           // base slots 0..n-1
        for (int a = 0; a < ctx->k(); ++a)
            pool.push_back(ctx->n + a);  // algebra slots
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<int> base, alg;
        for (int j = 0; j < d; ++j) {
            if (pool[j] < ctx->n)
                base.push_back(pool[j]);
            else
                alg.push_back(pool[j] - ctx->n);
        }
        int c = coef(rng);
        ScalarFn f = ScalarFn::constant(ctx->n, c);
        if (std::uniform_int_distribution<int>(0, 2)(rng) == 0)
            f = f * ScalarFn::variable(ctx->n, 0);
        m.add(std::move(base), std::move(alg), f);
    }
    return m;
}

Covector randomCovector(std::mt19937& rng, const ContextPtr& ctx) {
    std::uniform_int_distribution<int> coef(-2, 2);
    Covector phi = Covector::zero(ctx);
    for (int i = 0; i < ctx->n; ++i)
        phi.alpha[i] = ScalarFn::constant(ctx->n, coef(rng));
    for (int a = 0; a < ctx->k(); ++a)
        phi.xi[a] = ScalarFn::constant(ctx->n, coef(rng));
    return phi;
}

int totalDegree(const Multivector& m) {
    if (m.isZero())
        return 0;
    const MonoKey& k = m.comps().begin()->first;
    return static_cast<int>(k.first.size() + k.second.size());
}

}  // namespace

TEST_CASE("wedge basics") {
    auto ctx = planeSl2();
    Multivector dx0 = Multivector::baseVector(ctx, 0);
    Multivector dy = Multivector::baseVector(ctx, 1);
    CHECK(wedge(dx0, dx0).isZero());
    CHECK(wedge(dx0, mono(ctx, {}, {H})) == mono(ctx, {0}, {H}));
    // repeated algebra factor across the wedge
    ScalarFn ef = ScalarFn::exponential(2, {1, -1});
    ScalarFn emf = ScalarFn::exponential(2, {-1, 1});
    Multivector a = mono(ctx, {}, {H, EP}, ef);
    Multivector b = mono(ctx, {}, {H, EM}, emf);
    CHECK(wedge(a, b).isZero());
    CHECK(wedge(dx0, dy) == -wedge(dy, dx0));
}

TEST_CASE("wedge associativity and graded commutativity, randomized") {
    auto ctx = planeSl2();
    std::mt19937 rng(43);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<int> deg(0, 3);
        Multivector P = randomHomogeneous(rng, ctx, deg(rng));
        Multivector Q = randomHomogeneous(rng, ctx, deg(rng));
        Multivector R = randomHomogeneous(rng, ctx, deg(rng));
        CHECK(wedge(wedge(P, Q), R) == wedge(P, wedge(Q, R)));
        Multivector flip = wedge(Q, P);
        if ((totalDegree(P) * totalDegree(Q)) % 2 != 0)
            flip = -flip;
        CHECK(wedge(P, Q) == flip);
    }
}

TEST_CASE("contract basics") {
    auto ctx = planeSl2();
    Multivector pi = mono(ctx, {0, 1}, {});
    CHECK(contract(pi, Covector::dx(ctx, 0)) == Multivector::baseVector(ctx, 1));
    CHECK(contract(mono(ctx, {}, {H, EP}), Covector::dual(ctx, EP)) ==
          -mono(ctx, {}, {H}));
    CHECK(contract(mono(ctx, {}, {H}), Covector::dx(ctx, 0)).isZero());
}

TEST_CASE("pi-sharp of an exact one-form") {
    // pi = dx ^ dy duals; f = a x - b y gives pi#(df) = b d/dx + a d/dy.
    auto ctx = planeSl2();
    Rational a = 1, b = 2;
    Multivector pi = mono(ctx, {0, 1}, {});
    Covector df = Covector::zero(ctx);
    df.alpha[0] = ScalarFn::constant(2, a);
    df.alpha[1] = ScalarFn::constant(2, -b);
    Multivector sharp = contract(pi, df);
    CHECK(sharp == Multivector::baseVector(ctx, 0).scaled(b) +
                       Multivector::baseVector(ctx, 1).scaled(a));
}

TEST_CASE("contract is an antiderivation, randomized") {
    auto ctx = planeSl2();
    std::mt19937 rng(47);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<int> deg(0, 3);
        Multivector P = randomHomogeneous(rng, ctx, deg(rng));
        Multivector Q = randomHomogeneous(rng, ctx, deg(rng));
        Covector phi = randomCovector(rng, ctx);
        Multivector rhs = wedge(contract(P, phi), Q);
        Multivector second = wedge(P, contract(Q, phi));
        if (totalDegree(P) % 2 != 0)
            second = -second;
        CHECK(contract(wedge(P, Q), phi) == rhs + second);
    }
}

TEST_CASE("bigrade projection") {
    auto ctx = planeSl2();
    Multivector pi = mono(ctx, {0, 1}, {});
    Multivector K = mono(ctx, {0}, {H});
    Multivector tau = mono(ctx, {}, {EP, EM});
    Multivector sum = pi + K + tau;
    CHECK(bigrade(sum, 2, 0) == pi);
    CHECK(bigrade(sum, 1, 1) == K);
    CHECK(bigrade(sum, 0, 2) == tau);
    CHECK(bigrade(sum, 2, 0) + bigrade(sum, 1, 1) + bigrade(sum, 0, 2) == sum);
    CHECK(bigrade(K, 1, 1) == K);
    CHECK(bigrade(K, 0, 2).isZero());
}

TEST_CASE("lie derivative by vector fields") {
    auto ctx = planeSl2();
    ScalarFn ef = ScalarFn::exponential(2, {1, -1});
    Multivector P = mono(ctx, {}, {H, EP}, ef);
    CHECK(lie_derivative(Multivector::baseVector(ctx, 0), P) == P);

    // L_{x d/dy}(d/dx) = -d/dy
    Multivector X = mono(ctx, {1}, {}, ScalarFn::variable(2, 0));
    CHECK(lie_derivative(X, Multivector::baseVector(ctx, 0)) ==
          -Multivector::baseVector(ctx, 1));
    CHECK_THROWS_AS(lie_derivative(mono(ctx, {0, 1}, {}), P), std::invalid_argument);
}

TEST_CASE("lie derivative is a wedge derivation, randomized") {
    auto ctx = planeSl2();
    std::mt19937 rng(53);
    for (int trial = 0; trial < 25; ++trial) {
        Multivector X(ctx);
        std::uniform_int_distribution<int> coef(-2, 2);
        for (int i = 0; i < 2; ++i) {
            ScalarFn c = ScalarFn::constant(2, coef(rng)) +
                         ScalarFn::variable(2, coef(rng) % 2 == 0 ? 0 : 1).scaled(coef(rng));
            X.add({i}, {}, c);
        }
        std::uniform_int_distribution<int> deg(0, 2);
        Multivector P = randomHomogeneous(rng, ctx, deg(rng));
        Multivector Q = randomHomogeneous(rng, ctx, deg(rng));
        CHECK(lie_derivative(X, wedge(P, Q)) ==
              wedge(lie_derivative(X, P), Q) + wedge(P, lie_derivative(X, Q)));
    }
}

TEST_CASE("de Rham differential on algebra-valued forms") {
    // tau = (1/lambda) E+^E- on R^1
    auto ctx = makeContext(1, {"lambda"}, LieAlgebraData::sl2());
    AlgMultivector tau(1, 2);
    ScalarFn invL = ScalarFn::constant(1, 1) / ScalarFn::variable(1, 0);
    tau.add({EP, EM}, invL);
    GForm dtau = de_rham(GForm::fromAlg(ctx, tau));
    AlgMultivector expect(1, 2);
    expect.add({EP, EM}, -(invL * invL));
    CHECK(dtau.coeff({0}) == expect);
}

TEST_CASE("de Rham of the exp-weighted sl2 bivector over the plane") {
    auto ctx = planeSl2();
    ScalarFn ef = ScalarFn::exponential(2, {1, -1});
    ScalarFn emf = ScalarFn::exponential(2, {-1, 1});
    AlgMultivector tau(2, 2);
    tau.add({H, EP}, ef);
    tau.add({H, EM}, emf);
    tau.add({EP, EM}, ScalarFn::constant(2, 1));
    GForm dtau = de_rham(GForm::fromAlg(ctx, tau));

    AlgMultivector dxPart(2, 2), dyPart(2, 2);
    dxPart.add({H, EP}, ef);
    dxPart.add({H, EM}, -emf);
    dyPart.add({H, EP}, -ef);
    dyPart.add({H, EM}, emf);
    CHECK(dtau.coeff({0}) == dxPart);
    CHECK(dtau.coeff({1}) == dyPart);
}

TEST_CASE("d of d vanishes, randomized") {
    auto ctx = planeSl2();
    std::mt19937 rng(59);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int trial = 0; trial < 30; ++trial) {
        AlgMultivector A(2, 1);
        for (int a = 0; a < 3; ++a) {
            ScalarFn c = ScalarFn::constant(2, coef(rng));
            c = c + ScalarFn::variable(2, 0).scaled(coef(rng)) * ScalarFn::variable(2, 1);
            if (coef(rng) > 0)
                c = c * ScalarFn::exponential(2, {1, coef(rng)});
            A.add({a}, c);
        }
        GForm omega = GForm::fromAlg(ctx, A);
        CHECK(de_rham(de_rham(omega)).isZero());
    }
}

TEST_CASE("context mismatch is rejected") {
    auto c1 = planeSl2(), c2 = planeSl2();
    Multivector a = Multivector::baseVector(c1, 0);
    Multivector b = Multivector::baseVector(c2, 0);
    CHECK_THROWS_AS(wedge(a, b), std::invalid_argument);
}
