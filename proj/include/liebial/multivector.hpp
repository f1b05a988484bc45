#pragma once

#include <memory>

#include "liebial/lie_algebra.hpp"

namespace liebial {

/// Base manifold R^n with coordinates plus the structure Lie algebra: the
/// ambient data for sections of Lambda^*(TM + M x g).
struct Context {
    int n = 0;
    std::vector<std::string> coords;
    LieAlgebraData L;

    int k() const { return L.k; }
};

using ContextPtr = std::shared_ptr<const Context>;

ContextPtr makeContext(int n, std::vector<std::string> coords, LieAlgebraData L);

/// Monomial key: sorted base (tangent) indices and sorted algebra indices.
/// The monomial is dx-dual-ordered as d/dx_{i1} ^ ... ^ e_{a1} ^ ...
using MonoKey = std::pair<std::vector<int>, std::vector<int>>;

/// Section of Lambda^*(TM + M x g) in bigraded sparse storage: each key
/// contributes a (p, q) bigrade with p = |base part|, q = |algebra part|.
/// Mixed bigrades may coexist; zero coefficients are never stored.
class Multivector {
public:
    Multivector() = default;
    explicit Multivector(ContextPtr ctx) : ctx_(std::move(ctx)) {}

    const ContextPtr& ctx() const { return ctx_; }
    bool isZero() const { return comps_.empty(); }
    const std::map<MonoKey, ScalarFn>& comps() const { return comps_; }

    /// Adds c * d/dx_{base[0]} ^ ... ^ e_{alg[0]} ^ ...; either index list may
    /// be unsorted, shuffle signs apply, repeats give zero.
    void add(std::vector<int> base, std::vector<int> alg, const ScalarFn& coeff);
    ScalarFn coeff(const std::vector<int>& base, const std::vector<int>& alg) const;

    Multivector operator+(const Multivector& o) const;
    Multivector operator-() const;
    Multivector operator-(const Multivector& o) const;
    Multivector scaled(const Rational& r) const;
    Multivector scaled(const ScalarFn& f) const;
    bool operator==(const Multivector& o) const;

    /// True iff every stored monomial has total degree |base| + |alg| == d.
    bool homogeneous(int d) const;

    static Multivector fromScalar(ContextPtr ctx, const ScalarFn& f);
    static Multivector baseVector(ContextPtr ctx, int i);
    static Multivector algElement(ContextPtr ctx, const AlgMultivector& A);

private:
    ContextPtr ctx_;
    std::map<MonoKey, ScalarFn> comps_;
};

/// Section of T*M + M x g*: a one-form part alpha and a dual-algebra part xi.
struct Covector {
    ContextPtr ctx;
    std::vector<ScalarFn> alpha;  // n components, basis dx_i
    std::vector<ScalarFn> xi;     // k components, basis e_a*

    static Covector zero(ContextPtr ctx);
    static Covector dx(ContextPtr ctx, int i);
    static Covector dual(ContextPtr ctx, int a);

    Covector operator+(const Covector& o) const;
    Covector operator-() const;
    Covector operator-(const Covector& o) const;
    Covector scaled(const ScalarFn& f) const;
    bool isZero() const;
    bool operator==(const Covector& o) const;
};

Multivector wedge(const Multivector& P, const Multivector& Q);

/// Interior product i_phi P: a degree -1 antiderivation with the pairings
/// <dx_i, d/dx_j> = delta_ij, <e_a*, e_b> = delta_ab, cross pairings zero.
Multivector contract(const Multivector& P, const Covector& phi);

/// The (p, q) component of P.
Multivector bigrade(const Multivector& P, int p, int q);

/// L_X P for a vector field X (bigrade (1,0)): X differentiates coefficients
/// and acts on tangent factors by the classical Lie bracket.
Multivector lie_derivative(const Multivector& X, const Multivector& P);

/// Differential form on the base with values in Lambda^* g: sorted form-index
/// subsets mapped to algebra multivectors.
class GForm {
public:
    GForm() = default;
    GForm(ContextPtr ctx, int formDegree, int algDegree)
        : ctx_(std::move(ctx)), formDeg_(formDegree), algDeg_(algDegree) {}

    const ContextPtr& ctx() const { return ctx_; }
    int formDegree() const { return formDeg_; }
    int algDegree() const { return algDeg_; }
    bool isZero() const { return comps_.empty(); }
    const std::map<std::vector<int>, AlgMultivector>& comps() const { return comps_; }

    void add(std::vector<int> formIdx, const AlgMultivector& value);
    AlgMultivector coeff(const std::vector<int>& sortedIdx) const;

    GForm operator+(const GForm& o) const;
    GForm operator-() const;
    GForm operator-(const GForm& o) const;
    bool operator==(const GForm& o) const;

    static GForm fromAlg(ContextPtr ctx, const AlgMultivector& A);

private:
    ContextPtr ctx_;
    int formDeg_ = 0;
    int algDeg_ = 0;
    std::map<std::vector<int>, AlgMultivector> comps_;
};

/// Componentwise exterior derivative.
GForm de_rham(const GForm& omega);

/// Canonical printed form: terms in key order, tangent factors written
/// @coord, algebra factors by basis name, e.g. "(exp(x - y))*@x^H".
std::string printMultivector(const Multivector& P);

}  // namespace liebial
