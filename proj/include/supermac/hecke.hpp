#pragma once

// The polynomial representation of the affine Hecke algebra on
// Q(q,t)[x_1..x_N], non-symmetric Macdonald polynomials E_η, and the
// constructions of P_Λ built from them.
//
// Everything polynomial here is templated on the coefficient type so the same
// operator code runs exactly (RatFun) or at a point modulo a prime (modp::Fp).
// Only those two instantiations exist.

#include "supermac/coeff.hpp"
#include "supermac/modp.hpp"
#include "supermac/shape.hpp"
#include "supermac/superpoly.hpp"

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace supermac {

struct HeckeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Non-negative entries; the length is the ambient number of variables.
using Composition = std::vector<int>;

/// "5,2,0,1" -> {5,2,0,1}.  Throws HeckeError naming the offending position.
Composition parse_composition(std::string_view text);
std::string composition_str(const Composition& c);

/// Polynomial in x_1..x_N without θ's; sparse, no zero coefficients.
template <class C>
class BasicXPoly {
public:
    using Exponents = std::vector<int>;

    explicit BasicXPoly(int n_vars = 0) : n_(n_vars) {}
    static BasicXPoly constant(int n_vars, const C& c) {
        BasicXPoly f(n_vars);
        f.add_term(Exponents(static_cast<std::size_t>(n_vars), 0), c);
        return f;
    }
    static BasicXPoly monomial(const Exponents& e, const C& c = C(1)) {
        BasicXPoly f(static_cast<int>(e.size()));
        f.add_term(e, c);
        return f;
    }

    int n_vars() const { return n_; }
    const std::map<Exponents, C>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    C coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? C(0) : it->second;
    }

    void add_term(const Exponents& e, const C& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(e, c);
        if (fresh) return;
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    BasicXPoly& operator+=(const BasicXPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    BasicXPoly& operator-=(const BasicXPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend BasicXPoly operator+(BasicXPoly a, const BasicXPoly& b) { return a += b; }
    friend BasicXPoly operator-(BasicXPoly a, const BasicXPoly& b) { return a -= b; }
    friend BasicXPoly operator*(const BasicXPoly& a, const BasicXPoly& b) {
        BasicXPoly out(a.n_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e = ea;
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                out.add_term(e, ca * cb);
            }
        return out;
    }
    BasicXPoly scaled(const C& c) const {
        BasicXPoly out(n_);
        if (c.is_zero()) return out;
        for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
        return out;
    }
    friend bool operator==(const BasicXPoly& a, const BasicXPoly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }
    friend bool operator!=(const BasicXPoly& a, const BasicXPoly& b) { return !(a == b); }

private:
    int n_;
    std::map<Exponents, C> terms_;
};

using XPoly = BasicXPoly<RatFun>;
using XPolyMod = BasicXPoly<modp::Fp>;

std::string to_string(const XPoly& f);
/// JSON object {"N":..,"terms":[{"x":"5,2,0,1","c":"..."}]}, keys sorted.
std::string to_json(const XPoly& f);

/// The parameters the operators need: N and the values of q and t.
template <class C>
struct HeckeRing {
    int N = 0;
    C q, t;
    /// base^k for any integer k (base nonzero when k < 0).
    C power(const C& base, long k) const;
};
HeckeRing<RatFun> exact_ring(int N);
/// q, t specialized to q0, t0 in F_p with p = modp::kFieldPrime.
HeckeRing<modp::Fp> mod_ring(int N, std::uint64_t q0, std::uint64_t t0);

/// Symbolic operator; indices are 1-based variable indices.
struct HeckeOp {
    enum class Kind { T, Tinv, T0, tau, tau_inv, omega, Y, Uplus, Uminus, A };
    Kind kind = Kind::T;
    int i = 0;          // T_i, T_i⁻¹, τ_i, Y_i
    int lo = 1, hi = 0; // variable range for U⁺, U⁻ and A (inclusive)

    static HeckeOp T(int i) { return {Kind::T, i}; }
    static HeckeOp Tinv(int i) { return {Kind::Tinv, i}; }
    static HeckeOp T0() { return {Kind::T0, 0}; }
    static HeckeOp tau(int i) { return {Kind::tau, i}; }
    static HeckeOp tau_inv(int i) { return {Kind::tau_inv, i}; }
    static HeckeOp omega() { return {Kind::omega, 0}; }
    static HeckeOp Y(int i) { return {Kind::Y, i}; }
    static HeckeOp Uplus(int lo, int hi) { return {Kind::Uplus, 0, lo, hi}; }
    static HeckeOp Uminus(int lo, int hi) { return {Kind::Uminus, 0, lo, hi}; }
    static HeckeOp A(int lo, int hi) { return {Kind::A, 0, lo, hi}; }
};

/// Exact image op(f).  Throws HeckeError when an index is out of range.
template <class C>
BasicXPoly<C> apply(const HeckeOp& op, const BasicXPoly<C>& f, const HeckeRing<C>& R);

/// K_σ: variable x_j is replaced by x_{σ(j)} (σ one-line, 1-based).
template <class C>
BasicXPoly<C> permute_vars(const BasicXPoly<C>& f, const std::vector<int>& sigma);
/// Sets x_i = 0 and relabels the remaining variables.
template <class C>
BasicXPoly<C> set_zero(const BasicXPoly<C>& f, int i);
/// Π_{lo ≤ i < j ≤ hi} (s x_i − x_j); s = 1 gives the Vandermonde Δ, s = t gives Δᵗ.
template <class C>
BasicXPoly<C> delta(int N, int lo, int hi, const C& s);
/// f / Π_{lo ≤ i < j ≤ hi}(s x_i − x_j); throws HeckeError if the division is not exact.
template <class C>
BasicXPoly<C> divide_delta(const BasicXPoly<C>& f, int lo, int hi, const C& s);

/// η̄_i = q^{η_i} t^{−l̄_η(i)}.
template <class C>
C cherednik_eigenvalue(const Composition& eta, int i, const HeckeRing<C>& R);
RatFun cherednik_eigenvalue(const Composition& eta, int i);

/// ν ≺ η: ν⁺ strictly dominated by η⁺, or ν⁺ = η⁺ and w_η < w_ν in Bruhat order.
bool bruhat_less(const Composition& nu, const Composition& eta);
/// The order ≼ of the interpolation-polynomial vanishing: a permutation π with
/// ν_i < η_{π(i)} when i < π(i) and ν_i ≤ η_{π(i)} when i ≥ π(i).
bool vanishing_leq(const Composition& nu, const Composition& eta);

/// All compositions of `size` with N parts.
std::vector<Composition> compositions(int size, int N);

/// Solves for E_η by the simultaneous Y-eigenproblem on the Bruhat span below η.
/// Thread safe; images of monomials and finished E's are memoized.
template <class C>
class NonsymSolver {
public:
    explicit NonsymSolver(HeckeRing<C> ring);
    ~NonsymSolver();
    NonsymSolver(const NonsymSolver&) = delete;
    NonsymSolver& operator=(const NonsymSolver&) = delete;

    const HeckeRing<C>& ring() const;
    BasicXPoly<C> E(const Composition& eta);
    /// Coefficients of a homogeneous f in the E-basis; keys with zero value omitted.
    std::map<Composition, C> expand_in_E(const BasicXPoly<C>& f);

private:
    struct Impl;
    Impl* impl_;
};

/// E_η over Q(q,t) in N = η.size() variables (shared cached solver per N).
XPoly nonsym_macdonald(const Composition& eta);

/// T_i E_η against its three-case closed form.
bool check_Ti_action(const Composition& eta, int i);
/// E_η(x_1..x_{N−1},0) = E_{η₋} or 0; for η with exactly one zero entry (at i)
/// also E_η|_{x_i=0} = E_{η with entry i removed} and E_η|_{x_j=0} = 0 for j > i.
bool stability_check(const Composition& eta);

/// Λ^R = (Λ_m,…,Λ_1, Λ_N,…,Λ_{m+1}) with Λˢ padded by zeros to N − m entries.
Composition reverse_composition(const SuperPartition& L, int N);
/// P_Λ in N variables from E_{Λ^R} by antisymmetrizing the first m variables
/// and t-symmetrizing the rest.  Requires N ≥ ℓ(Λ) (which implies N ≥ m).
SuperPolyN symmetrize_to_P(const SuperPartition& L, int N);

enum class D1Kind { star, circledast };
/// The operator D₁* (star) or D₁⊛ (circledast) on a superpolynomial in N variables.
SuperPolyN d1_operator(const SuperPolyN& f, D1Kind which);
/// ε_λ = Σ_{i=1}^N q^{λ_i} t^{1−i}.
RatFun epsilon(const Partition& lambda, int N);

/// 𝕁_{N,p} = {μ : η ≼ μ ≼ η + 1^N, |μ| = |η| + p}.
std::set<Composition> pieri_bound_set(const Composition& eta, int p);
/// Support of x_{i_1}⋯x_{i_p} E_η in the E-basis.  Computed modulo kFieldPrime
/// at two fixed points (q,t) and united: a coefficient nonzero at either point
/// is nonzero in Q(q,t).  `exact` switches to Q(q,t) arithmetic.
std::set<Composition> pieri_support_set(const Composition& eta, const std::vector<int>& idx, bool exact = false);

}  // namespace supermac
