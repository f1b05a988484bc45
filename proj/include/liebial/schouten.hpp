#pragma once

#include "liebial/multivector.hpp"

namespace liebial {

/// Section theta = sum_{i,a} theta^{i,a} d/dx_i (x) e_a of TM (x) g.
struct Theta {
    ContextPtr ctx;
    std::vector<std::vector<ScalarFn>> comp;  // [i][a]

    static Theta zero(ContextPtr ctx);
    void set(int i, int a, const ScalarFn& f);

    /// theta#(dx_i) = sum_a theta^{i,a} e_a.
    AlgMultivector sharpDx(int i) const;
};

/// Schouten-type bracket on sections of Lambda^*(TM + M x g), extended from
/// [X + A, Y + B] = [X, Y] + X(B) - Y(A) + [A, B] by graded antisymmetry
/// [P,Q] = -(-1)^{(p-1)(q-1)}[Q,P] and graded Leibniz
/// [P, Q^R] = [P,Q]^R + (-1)^{(p-1)q} Q^[P,R].  On functions,
/// [X, f] = X(f) through the tangent projection.
Multivector schouten(const Multivector& P, const Multivector& Q);

/// The (1,1) section K with contract(K, dx_i) = theta#(dx_i) for every i;
/// concretely K = sum theta^{i,a} d/dx_i ^ e_a.
Multivector theta_to_K(const Theta& theta);

/// [pi, theta_to_K(theta)], the Poisson differential of theta.
Multivector d_pi(const Theta& theta, const Multivector& pi);

/// [theta, theta] = sum over ordered term pairs [X_s, X_t] (x) A_s ^ A_t,
/// a (1,2) section.
Multivector theta_bracket(const Theta& theta);

/// theta ^ theta = (1/2) sum over ordered term pairs X_s ^ X_t (x) [A_s, A_t],
/// a (2,1) section.
Multivector theta_wedge(const Theta& theta);

/// delta applied to the algebra leg: sum X_s (x) delta(A_s), a (1,2) section.
Multivector delta_theta(const Theta& theta, const Cobracket& delta);

/// [tau, theta] = sum X_s (x) [tau, A_s] with the pointwise algebraic
/// bracket, a (1,2) section.
Multivector tau_theta_bracket(const AlgMultivector& tau, const Theta& theta);

/// Total antisymmetrization of theta#(d tau):
/// sum_i theta#(dx_i) ^ (d tau / d x_i), a Lambda^3 g valued function.
AlgMultivector alt_theta_dtau(const Theta& theta, const AlgMultivector& tau);

}  // namespace liebial
