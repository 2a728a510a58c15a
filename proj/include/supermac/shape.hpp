#pragma once

// Superpartitions and their diagrams.
//
// A superpartition is stored as (a; s): a strictly decreasing (at most one
// zero, necessarily last), s a partition.  The diagram pair (circ, star) =
// (Λ⊛, Λ*) is always derived on demand.  Rows and columns are 1-based in
// Cell, 0-based in vectors.

#include "supermac/coeff.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace supermac {

/// Weakly decreasing positive parts.  Plain vector; helpers below keep it canonical.
using Partition = std::vector<int>;

struct ShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Cell {
    int row = 1;
    int col = 1;
    auto operator<=>(const Cell&) const = default;
};

int size(const Partition& p);
Partition conjugate(const Partition& p);
/// Part i (0-based), zero past the end.
inline int part(const Partition& p, std::size_t i) { return i < p.size() ? p[i] : 0; }
/// Classical dominance μ ≤ λ (equal sizes not required; compared by partial sums).
bool dominates_leq(const Partition& mu, const Partition& lambda);
bool contains(const Partition& mu, const Partition& lambda);  // μ ⊆ λ
/// Cells of λ/μ (μ ⊆ λ), row-major.
std::vector<Cell> skew_cells(const Partition& lambda, const Partition& mu);
bool is_horizontal_strip(const Partition& lambda, const Partition& mu);  // at most one cell per column
bool is_vertical_strip(const Partition& lambda, const Partition& mu);    // at most one cell per row
/// Staircase δ_k = (k-1, ..., 1) with zeros dropped.
Partition staircase(int k);
/// n(λ) = Σ (i-1) λ_i.
long n_stat(const Partition& p);
/// Σ (row-1) over a cell set.
long n_stat(const std::vector<Cell>& cells);
/// (arm, leg) of cell s in λ; throws ShapeError if s ∉ λ.
std::pair<int, int> arm_leg(const Partition& lambda, Cell s);

class SuperPartition {
public:
    SuperPartition() = default;
    /// Validating constructor; s may contain trailing zeros (dropped).
    SuperPartition(std::vector<int> a, std::vector<int> s);

    const std::vector<int>& a() const { return a_; }
    const Partition& s() const { return s_; }
    int m() const { return static_cast<int>(a_.size()); }
    /// Total degree |Λ| = |Λ*|.
    int n() const;
    /// ℓ(Λ) = m + ℓ(Λˢ) = number of rows of Λ⊛.
    int length() const { return m() + static_cast<int>(s_.size()); }

    Partition star() const;
    Partition circ() const;
    /// (Λ_1, ..., Λ_m, Λ_{m+1}, ..., Λ_N) padded with zeros to length N (N ≥ length()).
    std::vector<int> parts(int N) const;

    /// 1-based rows of the diagram that carry a circle.
    std::vector<int> circled_rows() const;
    /// 1-based columns that carry a circle.
    std::vector<int> circled_columns() const;

    std::string str() const;  // "a1,a2;s1,s2"

    auto operator<=>(const SuperPartition&) const = default;

private:
    std::vector<int> a_;
    Partition s_;
};

/// Parses "a1,...;s1,..." (whitespace ignored); ShapeError message carries the offset.
SuperPartition parse_superpartition(std::string_view text);

SuperPartition from_star_circledast(const Partition& star, const Partition& circ);
SuperPartition conjugate(const SuperPartition& L);
bool dominance_leq(const SuperPartition& O, const SuperPartition& L);
bool contains(const SuperPartition& O, const SuperPartition& L);

enum class StripKind { horizontal, vertical };
/// Plain: Λ*/Ω* and Λ⊛/Ω⊛ are kind-strips of the given size.  Tilde: Λ*/Ω*
/// of the given size and Λ⊛/Ω⊛ of size+1.  False on non-containment.
bool is_strip(const SuperPartition& L, const SuperPartition& O, StripKind kind, bool tilde, int size);

/// Boxes of Λ* not simultaneously in a circled row and a circled column.
std::vector<Cell> cells_B(const SuperPartition& L);
/// Λ⊛/δ_{m+1} (tilde = false) or Λ*/δ_m (tilde = true).
std::vector<Cell> cells_S(const SuperPartition& L, bool tilde);

/// Σ over fermionic squares (circled row and circled column) of the bosonic squares above.
long zeta(const SuperPartition& L);

SuperPartition remove_first_column(const SuperPartition& L);
SuperPartition remove_first_circle(const SuperPartition& L);
std::vector<int> fermionic_rows_after_tilde(const SuperPartition& L);

/// All superpartitions of bidegree (n|m).  Frozen order: descending
/// lexicographic order of Λ*, ties by descending lexicographic order of Λ⊛.
/// This is a linear extension of dominance with the most dominant first.
std::vector<SuperPartition> enumerate(int n, int m);
/// Count of enumerate(n, m) by an independent generating-function recursion.
long count_superpartitions(int n, int m);

/// inv(λ) with the entries taken as given (zeros included).
long inversions(const std::vector<int>& entries);

struct MiscStats {
    RatFun f_s;                 // f_{Λˢ}(t) with Λˢ padded by zeros to N - m entries
    long inv_s = 0;             // inv(Λˢ) with the same padding
    Partition a_minus_delta;    // Λᵃ - δ_m  (zeros dropped)
    long size_a_over_delta = 0; // |Λᵃ/δ_m| = |Λᵃ| - C(m,2)
    long n_a_over_delta = 0;    // n(Λᵃ/δ_m)
    long n_conj_a_over_delta = 0;  // n((Λ′)ᵃ/δ_m)
};
/// N is the ambient number of variables for the zero padding (N ≥ ℓ(Λ)).
MiscStats misc_stats(const SuperPartition& L, int N);

/// [k]_t! as a polynomial in t.
RatFun t_factorial(int k);

inline long binom2(long m) { return m * (m - 1) / 2; }

}  // namespace supermac
