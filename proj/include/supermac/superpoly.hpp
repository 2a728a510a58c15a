#pragma once

// Finite-variable superpolynomials in x_1..x_N, θ_1..θ_N and the classical
// bases m_Λ, e_Λ, p_Λ of symmetric superfunctions.

#include "supermac/coeff.hpp"
#include "supermac/shape.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace supermac {

/// A θ-monomial θ_{i1}⋯θ_{ik} with i1 < ... < ik, stored as a bit mask
/// (bit i-1 stands for θ_i).  N never exceeds 32 here.
using ThetaWord = std::uint32_t;

std::vector<int> theta_indices(ThetaWord w);
/// Sign and word of the product w1 · w2; sign 0 when an index repeats.
std::pair<int, ThetaWord> theta_product(ThetaWord w1, ThetaWord w2);

struct SuperMonomial {
    ThetaWord theta = 0;
    std::vector<std::uint8_t> x;  // exponents, length N
    auto operator<=>(const SuperMonomial&) const = default;
};

struct SuperpolyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class SuperPolyN {
public:
    explicit SuperPolyN(int n_vars = 0) : n_(n_vars) {}
    static SuperPolyN constant(int n_vars, const RatFun& c);
    /// Single term c · θ_word · x^exps.
    static SuperPolyN term(int n_vars, ThetaWord w, std::vector<std::uint8_t> exps, const RatFun& c);

    int n_vars() const { return n_; }
    const std::map<SuperMonomial, RatFun>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    RatFun coeff(const SuperMonomial& mono) const;

    void add_term(const SuperMonomial& mono, const RatFun& c);
    SuperPolyN& operator+=(const SuperPolyN& o);
    SuperPolyN& operator-=(const SuperPolyN& o);
    friend SuperPolyN operator+(SuperPolyN a, const SuperPolyN& b) { return a += b; }
    friend SuperPolyN operator-(SuperPolyN a, const SuperPolyN& b) { return a -= b; }
    friend SuperPolyN operator*(const SuperPolyN& a, const SuperPolyN& b);
    SuperPolyN scaled(const RatFun& c) const;
    friend bool operator==(const SuperPolyN& a, const SuperPolyN& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }
    friend bool operator!=(const SuperPolyN& a, const SuperPolyN& b) { return !(a == b); }

    /// K_{i,i+1}: exchange (x_i, θ_i) with (x_{i+1}, θ_{i+1}); 1 ≤ i < N.
    SuperPolyN swapped(int i) const;
    /// General K_σ: variable j is sent to position sigma[j-1] (1-based values).
    SuperPolyN permuted(const std::vector<int>& sigma) const;
    /// Checks invariance under every adjacent exchange.
    bool is_symmetric() const;

    std::string str() const;

private:
    int n_;
    std::map<SuperMonomial, RatFun> terms_;
};

SuperPolyN multiply(const SuperPolyN& f, const SuperPolyN& g);
/// Signed Grassmann derivative ∂/∂θ_i.
SuperPolyN theta_derivative(const SuperPolyN& f, int i);
/// Set x_i = 0 and θ_i = 0, then relabel the remaining variables 1..N-1.
SuperPolyN restrict(const SuperPolyN& f, int i);

enum class Basis { monomial, elementary, powersum, macdonald };
std::string basis_name(Basis b);
Basis parse_basis(const std::string& s);  // "m", "e", "p", "P" or full names

SuperPolyN expand_monomial(const SuperPartition& L, int N);
SuperPolyN expand_e(const SuperPartition& L, int N);
SuperPolyN expand_p(const SuperPartition& L, int N);
/// e_k (tilde = false) or ẽ_k = m_{(0;1^k)} (tilde = true).
SuperPolyN elementary_factor(int k, bool tilde, int N);
/// p_k (tilde = false) or p̃_k = Σ θ_i x_i^k (tilde = true).
SuperPolyN powersum_factor(int k, bool tilde, int N);

/// Basis-tagged symmetric superfunction of fixed fermionic degree m.
struct SymFun {
    Basis basis = Basis::monomial;
    int m = 0;
    std::map<SuperPartition, RatFun> coeffs;  // no zero values

    RatFun coeff(const SuperPartition& L) const;
    void add(const SuperPartition& L, const RatFun& c);
    SymFun scaled(const RatFun& c) const;
    friend bool operator==(const SymFun& a, const SymFun& b) {
        return a.basis == b.basis && a.m == b.m && a.coeffs == b.coeffs;
    }
    friend bool operator!=(const SymFun& a, const SymFun& b) { return !(a == b); }
};

SymFun operator+(const SymFun& a, const SymFun& b);
SymFun operator-(const SymFun& a, const SymFun& b);

std::string to_json(const SymFun& f);
SymFun symfun_from_json(const std::string& text);

/// Rational transition matrix of the block (n|m): entry (Λ, Ω) is the
/// coefficient of m_Ω in X_Λ for X = e or p.  Rows/columns follow enumerate(n, m).
struct Transition {
    int n = 0, m = 0;
    Basis basis = Basis::powersum;
    std::vector<SuperPartition> index;
    std::map<SuperPartition, std::size_t> position;
    std::vector<std::vector<BigRat>> to_m;    // X_Λ = Σ_Ω to_m[Λ][Ω] m_Ω
    std::vector<std::vector<BigRat>> from_m;  // m_Λ = Σ_Ω from_m[Λ][Ω] X_Ω
};
/// Cached per (n, m, basis); thread safe.
std::shared_ptr<const Transition> transition(int n, int m, Basis basis);

/// Coefficient of θ_1⋯θ_m x^Ω in X_Λ computed by direct counting (no expansion).
BigRat transition_entry(const SuperPartition& L, const SuperPartition& O, Basis basis);

/// Basis conversion of homogeneous functions (all keys share (n|m) per block).
SymFun convert(const SymFun& f, Basis target);

/// Reads the symmetric polynomial f in the requested basis.  Requires f to be
/// symmetric and homogeneous of bidegree (n|m) with N ≥ n + m.
SymFun to_basis(const SuperPolyN& f, Basis basis, int m, int n);

/// Expands a SymFun in m-, e- or p-basis into N variables.
SuperPolyN expand(const SymFun& f, int N);

/// Product in the power-sum basis (both inputs converted if needed).
SymFun multiply_p(const SymFun& f, const SymFun& g);
/// Product p_Λ p_Ω = sign · p_Γ; sign 0 when a fermionic part repeats.
std::pair<int, SuperPartition> p_product(const SuperPartition& L, const SuperPartition& O);

}  // namespace supermac
