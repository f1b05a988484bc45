#pragma once

#include "liebial/schouten.hpp"

namespace liebial {

/// The classification data (pi, theta, tau, delta) over a context.  No
/// validity is assumed at construction; the verifiers decide.
struct Quadruple {
    ContextPtr ctx;
    Multivector pi;       // bigrade (2,0)
    Theta theta;          // TM (x) g section
    AlgMultivector tau;   // Lambda^2 g valued function
    Cobracket delta;

    static Quadruple zero(ContextPtr ctx);
};

struct ConditionRecord {
    std::string id;        // stable machine-readable condition name
    std::string ref;       // short human description of what is tested
    bool pass = false;
    std::string residual;  // canonical printed form, "0" when pass
};

struct Report {
    std::string title;
    std::vector<ConditionRecord> conditions;
    std::vector<std::string> notes;

    bool pass() const;
    void addCondition(std::string id, std::string ref, const Multivector& residual);
    void addCondition(std::string id, std::string ref, bool ok, std::string residual);
};

/// The four bigraded components of delta(Lambda) + (1/2)[Lambda, Lambda].
struct TComponents {
    Multivector t30, t21, t12, t03;
};

/// Lambda = pi + K + tau as a single bigraded section.
Multivector assemble_lambda(const Quadruple& q);

/// Odd degree-one extension of delta to mixed sections: delta kills
/// functions and tangent factors and expands algebra factors with the
/// derivation sign of the factor position.
Multivector delta_extend(const Cobracket& delta, const Multivector& P);

/// pi#(d tau) as a (1,2) section: sum_i pi#(dx_i) (x) (d tau / d x_i).
Multivector pi_sharp_dtau(const Multivector& pi, const AlgMultivector& tau);

/// The components computed through the specialized theta-calculus; each
/// equals the corresponding bigrade of delta(Lambda) + (1/2)[Lambda,Lambda].
TComponents t_components(const Quadruple& q);

/// Extracts the pure-algebra value of a (0,q) section.
AlgMultivector algPart(const Multivector& P, int qdeg);

/// The six structure conditions of the transitive classification.
Report verify_transitive(const Quadruple& q);

/// The coboundary case (delta = 0): Poisson + morphism + bracket
/// compatibility + the constant ad-invariant trivector Omega.
Report verify_coboundary(const Quadruple& q);

/// tau -> tau + r0, delta -> delta + [., r0]; leaves d_star unchanged.
Quadruple gauge_transform(const Quadruple& q, const AlgMultivector& r0);

/// d_* S = [Lambda, S] + delta(S).
Multivector d_star(const Quadruple& q, const Multivector& S);

/// Independent oracle: d_*^2 on every generator x_i, d/dx_i, e_a by two
/// direct d_star applications.
Report check_master(const Quadruple& q);

/// The Hamiltonian-tau refinement: the four separate vanishing conditions
/// plus the coordinatewise equivariance identity.
Report check_hamiltonian_tau(const Quadruple& q);

}  // namespace liebial
