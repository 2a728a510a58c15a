#pragma once

// The (q,t) scalar product on superspace and the Macdonald superpolynomials
// P_Λ it defines: monic, dominance-triangular in the monomial basis and
// pairwise orthogonal.

#include "supermac/coeff.hpp"
#include "supermac/shape.hpp"
#include "supermac/superpoly.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace supermac {

struct MacdonaldError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// z_Λ(q,t) = z_{Λˢ} q^{|Λᵃ|} Π_i (1 − q^{Λˢ_i}) / (1 − t^{Λˢ_i}).
RatFun z_super(const SuperPartition& L);

/// ⟨f, g⟩ with ⟨p_Λ, p_Ω⟩ = (−1)^{C(m,2)} z_Λ δ_{ΛΩ}; inputs in any classical basis.
RatFun scalar_product(const SymFun& f, const SymFun& g);

/// P_Λ for a dominance down-closed set of superpartitions of one bidegree.
struct MacdonaldTable {
    int n = 0, m = 0;
    std::vector<SuperPartition> index;        // linear extension, most dominant first
    std::map<SuperPartition, SymFun> P;       // monomial basis
    std::map<SuperPartition, RatFun> norm2;   // ⟨P_Λ, P_Λ⟩

    bool has(const SuperPartition& L) const { return P.contains(L); }
};

/// The full (n|m) block, in the frozen enumerate order.  Cached in memory and,
/// unless disabled, on disk (see cache_directory()).
std::shared_ptr<const MacdonaldTable> gram_schmidt_block(int n, int m);

/// The same construction on an explicit order of a down-closed set; used to
/// check that ties between incomparable superpartitions do not matter.
MacdonaldTable gram_schmidt_ordered(int n, int m, const std::vector<SuperPartition>& order);

/// Table containing at least the dominance down-set of Λ.  Uses the whole
/// block when it is small and the down-set alone otherwise.
std::shared_ptr<const MacdonaldTable> table_for(const SuperPartition& L);

/// P_Λ in the requested classical basis.
SymFun macdonald_P(const SuperPartition& L, Basis basis = Basis::monomial);

/// Re-expresses a classical-basis function in the P basis (bidegree blocks built on demand).
SymFun to_macdonald(const SymFun& f);
/// Expands a P-basis function in a classical basis.
SymFun from_macdonald(const SymFun& f, Basis basis);

RatFun norm_squared(const SuperPartition& L);
/// q^{|Λᵃ|} Π_{s∈ℬΛ} (1 − q^{a_{Λ*}(s)+1} t^{l_{Λ⊛}(s)}) / (1 − q^{a_{Λ⊛}(s)} t^{l_{Λ*}(s)+1}).
RatFun norm_formula(const SuperPartition& L);

/// ⟨P_Λ, P_Ω P_Γ⟩.
RatFun g_coefficient(const SuperPartition& L, const SuperPartition& O, const SuperPartition& G);
/// P_{Λ/Ω} = Σ_Γ g^Λ_{ΩΓ} / ‖P_Γ‖² P_Γ, in the P basis; zero unless Ω ⊆ Λ.
SymFun skew(const SuperPartition& L, const SuperPartition& O);

/// The homomorphism p̃_r ↦ (−q)^r p̃_r, p_r ↦ (−1)^{r−1} (1−q^r)/(1−t^r) p_r, in the p basis.
SymFun omega_qt(const SymFun& f);
/// Ω_{q,t} P_Λ(q,t) = (−1)^{C(m,2)} (q/t)^{|Λ|} Q_{Λ′}(1/t, 1/q) as exact p-expansions.
bool duality_check(const SuperPartition& L);

/// ‖P_Λ‖² reduced mod p at the point (q0, t0) by the same Gram–Schmidt run
/// over F_p; nullopt when a denominator vanishes at that point.
std::optional<std::uint64_t> norm_squared_mod(const SuperPartition& L, std::uint64_t q0, std::uint64_t t0,
                                              std::uint64_t p);

/// Coefficients of f (classical basis) in the P basis reduced mod p at (q0, t0);
/// keys with coefficient zero are omitted.  nullopt on a vanishing denominator.
std::optional<std::map<SuperPartition, std::uint64_t>> to_macdonald_mod(const SymFun& f, std::uint64_t q0,
                                                                         std::uint64_t t0, std::uint64_t p);

/// Directory for table caches: $SUPERMAC_CACHE_DIR, else ".supermac-cache".
/// An empty $SUPERMAC_CACHE_DIR disables the disk cache.
std::optional<std::string> cache_directory();
inline constexpr int kTableFormatVersion = 1;

std::string table_to_json(const MacdonaldTable& t);
MacdonaldTable table_from_json(const std::string& text);

}  // namespace supermac
