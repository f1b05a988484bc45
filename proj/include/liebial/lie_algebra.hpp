#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liebial/scalar.hpp"

namespace liebial {

/// Finite-dimensional Lie algebra given by structure constants
/// [e_a, e_b] = sum_d c_{ab}^d e_d.
struct LieAlgebraData {
    int k = 0;
    std::vector<std::string> basisNames;
    // c[{a,b}][d]; stored for a < b only, antisymmetry implied
    std::map<std::pair<int, int>, std::map<int, Rational>> c;

    static LieAlgebraData sl2();
    static LieAlgebraData abelian(int k);

    /// c_{ab}^d with antisymmetry applied.
    Rational structure(int a, int b, int d) const;
    void setBracket(int a, int b, const std::map<int, Rational>& components);
};

/// Candidate cobracket delta(e_a) = sum_{b<c} d_a^{bc} e_b ^ e_c.
struct Cobracket {
    int k = 0;
    // d[a][{b,c}] with b < c
    std::map<int, std::map<std::pair<int, int>, Rational>> d;

    bool isZero() const;
};

/// Element of Lambda^q g with ScalarFn coefficients over R^dim.
/// Keys are strictly increasing index subsets; zero coefficients are not
/// stored.
class AlgMultivector {
public:
    AlgMultivector(int dim = 0, int degree = 0) : dim_(dim), degree_(degree) {}

    int dim() const { return dim_; }
    int degree() const { return degree_; }
    bool isZero() const { return comps_.empty(); }
    const std::map<std::vector<int>, ScalarFn>& comps() const { return comps_; }

    /// Adds c * e_{idx[0]} ^ ... ^ e_{idx[q-1]}; indices may be unsorted,
    /// the shuffle sign is applied, repeated indices contribute zero.
    void add(std::vector<int> idx, const ScalarFn& coeff);
    ScalarFn coeff(const std::vector<int>& sortedIdx) const;

    AlgMultivector operator+(const AlgMultivector& o) const;
    AlgMultivector operator-() const;
    AlgMultivector operator-(const AlgMultivector& o) const;
    AlgMultivector scaled(const Rational& r) const;
    AlgMultivector scaled(const ScalarFn& f) const;
    AlgMultivector wedge(const AlgMultivector& o) const;
    /// Coefficient-wise partial derivative.
    AlgMultivector derivative(int i) const;
    bool operator==(const AlgMultivector& o) const;

    bool isConstant() const;

    static AlgMultivector basisElement(int dim, int k, std::vector<int> idx);

private:
    int dim_;     // ambient ScalarFn dimension
    int degree_;  // exterior degree q
    std::map<std::vector<int>, ScalarFn> comps_;
};

/// g-valued function: components in the algebra basis.
using AlgVector = std::vector<ScalarFn>;
/// g*-valued function: components in the dual basis.
using DualVector = std::vector<ScalarFn>;

bool checkJacobi(const LieAlgebraData& L);

/// Algebraic Schouten bracket on Lambda^* g, extended from the Lie bracket by
/// the graded Leibniz rule [P, Q^R] = [P,Q]^R + (-1)^{(p-1)q} Q^[P,R] and
/// graded antisymmetry [P,Q] = -(-1)^{(p-1)(q-1)}[Q,P].  Coefficients
/// multiply pointwise; nothing is differentiated.
AlgMultivector algSchouten(const LieAlgebraData& L, const AlgMultivector& P,
                           const AlgMultivector& Q);

/// Coboundary cobracket delta(e_a) = [e_a, r0] for constant r0.
Cobracket coboundaryCobracket(const LieAlgebraData& L, const AlgMultivector& r0);

/// delta as a degree-one AlgMultivector value on a basis element.
AlgMultivector cobracketOf(const Cobracket& delta, int dim, int a);
/// Odd-derivation extension of delta to Lambda^* g (delta of coefficients is
/// zero; delta is a bundle map).
AlgMultivector cobracketExtend(const Cobracket& delta, const AlgMultivector& P);

bool checkCocycle(const LieAlgebraData& L, const Cobracket& delta);

/// delta^2(e_a) for every basis element.
std::vector<AlgMultivector> deltaSquared(const LieAlgebraData& L, const Cobracket& delta);

/// Ad-invariance of a constant trivector: e_a . Omega = 0 for all a.
/// Throws std::invalid_argument for non-constant input.
bool isAdInvariant(const LieAlgebraData& L, const AlgMultivector& omega);

/// ad*_A xi with <ad*_A xi, B> = -<xi, [A, B]>.
DualVector coad(const LieAlgebraData& L, const AlgVector& A, const DualVector& xi);

/// Basis of the center of g over Q, one rational coefficient vector per
/// element.
std::vector<std::vector<Rational>> center(const LieAlgebraData& L);

}  // namespace liebial
