#pragma once

#include "liebial/bialgebroid.hpp"

namespace liebial {

/// Section of T*M + M x g*; alias of the covector type.
using DualSection = Covector;

/// [phi, psi]_Lambda = L_{Lambda#phi} psi - L_{Lambda#psi} phi
/// - d[Lambda(phi, psi)], for Lambda of total degree 2, with
/// Lambda#phi = contract(Lambda, phi) and the Lie derivative of a covector
/// along a degree-one section e defined on generators by
/// (L_e phi)(e') = rho(e)<phi, e'> - <phi, [e, e']>.
DualSection lambda_bracket(const Multivector& lambda, const DualSection& phi,
                           const DualSection& psi);

/// The full dual-algebroid bracket: lambda_bracket for Lambda = pi + K + tau
/// plus the cobracket-induced pointwise bracket on the g* legs,
/// <[xi, eta]°, e_a> = <delta(e_a), xi ^ eta>.
DualSection dual_bracket(const Quadruple& q, const DualSection& phi,
                         const DualSection& psi);

/// The cobracket-induced part alone.
DualSection delta_dual_bracket(const Quadruple& q, const DualSection& phi,
                               const DualSection& psi);

/// rho_*(alpha + xi) = pi#(alpha) + the vector part of K#(xi).
Multivector dual_anchor(const Quadruple& q, const DualSection& phi);

/// phi(alpha)(xi) = L_{pi#alpha} xi + ad*_{theta#alpha} xi.
DualVector phi_map(const Quadruple& q, const std::vector<ScalarFn>& alpha,
                   const DualVector& xi);

/// psi(xi)(alpha) = -<xi, d(theta#alpha)> - i_{(theta#)* xi} d(alpha),
/// with (theta#)* xi = sum_{i,a} theta^{i,a} xi_a d/dx_i.
std::vector<ScalarFn> psi_map(const Quadruple& q, const DualVector& xi,
                              const std::vector<ScalarFn>& alpha);

/// Matched-pair verification for tau = 0: the algebra/coalgebra pair, the
/// morphism property of the dual anchor on g*, the action compatibility, and
/// dual Jacobi on generators.
Report check_matched_pair(const Quadruple& q);

/// Cross-checks d_star against the dual-bracket machinery on coordinate
/// functions and their products.
Report dual_differential_suite(const Quadruple& q);

}  // namespace liebial
