#pragma once

// Evaluations of symmetric superfunctions with a formal parameter u, their
// closed forms on P_Λ, and the norm recovered from them.
//
// Conventions.  A function of fermionic degree m is read through the
// coefficient of θ_1⋯θ_m (in that order), i.e. θ-derivatives act from the
// right; for m = 0 the Schur factor and the point set are empty.  The specialization points are
// v_r = t^{r−1}/q^{max(m−r,0)}.

#include "supermac/coeff.hpp"
#include "supermac/shape.hpp"
#include "supermac/superpoly.hpp"

#include <string>
#include <vector>

namespace supermac {

struct EvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// v_1, …, v_N for fermionic degree m.
std::vector<RatFun> eval_points(int m, int N);

/// s_λ(x_1..x_k) at the given points, by the bialternant ratio; 0 if ℓ(λ) > k.
RatFun schur_at(const Partition& lambda, const std::vector<RatFun>& points);

/// 𝓔^m_u(p_Λ) with m = Λ.m().
UPoly eval_powersum(const SuperPartition& L);
/// Linear extension: f is converted to the power-sum basis first.
UPoly evaluate(const SymFun& f);
/// [∂_{θ_1}⋯∂_{θ_m} F / Δ_m]_{x_r = v_r} for F = f in N variables; equals
/// evaluate(f) at u = t^{N−m}.  Throws EvalError if Δ_m does not divide.
RatFun eval_via_variables(const SymFun& f, int N);
/// Same map on an already expanded polynomial of fermionic degree m.
RatFun eval_polynomial(const SuperPolyN& F, int m);

/// Second evaluation Ẽ^m_u(f), m ≥ 1.  On p_Λ, ∂_{θ_1} followed by x_1 = 0
/// leaves only the p̃_0 factor, so Ẽ(p_Λ) = 𝓔^{m−1}(p_{Λ minus its 0}) when
/// Λ_m = 0, and 0 otherwise.
UPoly evaluate_tilde(const SymFun& f);
/// Ẽ at u = t^{N−m} through N variables: 𝓔^{m−1} of ∂_{θ_N}F at x_N = 0.
RatFun eval_tilde_via_variables(const SymFun& f, int N);
/// Ẽ fitted from the N-variable values at N = m, …, m + deg + 1.
UPoly evaluate_tilde_interpolated(const SymFun& f);

/// A closed form q^a t^b · Π_k(1 − q^{α_k}t^{β_k}u) / Π_s(1 − q^{γ_s}t^{ε_s}),
/// kept factored for display.
struct PhiFormula {
    using Monomial = std::pair<long, long>;  // (q-exponent, t-exponent)
    Monomial prefactor;
    std::vector<Monomial> roots;
    std::vector<Monomial> denominator;
    UPoly value() const;
    /// "t^6/q^3*(1-u)*(1-q*u)/((1-q^4*t^3)*(1-t))".
    std::string factored() const;
};

/// The closed form of Φ_Λ (tilde = false) or Φ̃_Λ (tilde = true, m ≥ 1).
PhiFormula phi_formula(const SuperPartition& L, bool tilde);
/// The alternative product form, Π(t^{i−1} − q^{j−1}t^{m}u) (resp. t^{m−1}), expanded.
UPoly phi_formula_alt(const SuperPartition& L, bool tilde);

/// Φ_Λ and Φ̃_Λ computed from the Gram–Schmidt P_Λ.
UPoly phi(const SuperPartition& L);
UPoly phi_tilde(const SuperPartition& L);

/// ‖P_Λ‖² = (−1)^{|Λ|+C(m,2)} q^{|Λ|} Φ_Λ(0;q,t) / Φ_{Λ′}(0;1/t,1/q).
RatFun norm_from_eval(const SuperPartition& L);

/// Statistics entering the closed forms; δ is δ_m, or δ_{m−1} for tilde.
struct EvalStats {
    long n_S = 0;             // n(𝒮Λ) or n(S̃Λ)
    long n_conj_a = 0;        // n((Λ′)ᵃ/δ)
    long size_a = 0;          // |Λᵃ/δ|
    long n_a = 0;             // n(Λᵃ/δ)
};
EvalStats eval_stats(const SuperPartition& L, bool tilde);

}  // namespace supermac
