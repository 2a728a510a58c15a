#include "supermac/macdonald.hpp"

namespace supermac {

RatFun g_coefficient(const SuperPartition& L, const SuperPartition& O, const SuperPartition& G) {
    if (L.n() != O.n() + G.n() || L.m() != O.m() + G.m()) return RatFun();
    const SymFun prod = multiply_p(macdonald_P(O, Basis::powersum), macdonald_P(G, Basis::powersum));
    return scalar_product(macdonald_P(L, Basis::powersum), prod);
}

SymFun skew(const SuperPartition& L, const SuperPartition& O) {
    SymFun out{Basis::macdonald, L.m() - O.m(), {}};
    if (out.m < 0 || !contains(O, L)) return out;
    for (const auto& G : enumerate(L.n() - O.n(), out.m)) {
        const RatFun g = g_coefficient(L, O, G);
        if (!g.is_zero()) out.add(G, g / norm_squared(G));
    }
    return out;
}

SymFun omega_qt(const SymFun& f) {
    const SymFun fp = convert(f, Basis::powersum);
    SymFun out{Basis::powersum, f.m, {}};
    for (const auto& [L, c] : fp.coeffs) {
        long asum = 0;
        for (int a : L.a()) asum += a;
        RatFun factor = RatFun::qt_power(asum, 0);
        for (int k : L.s()) factor *= one_minus_qt(k, 0) / one_minus_qt(0, k);
        const bool negative = (L.n() - static_cast<long>(L.s().size())) % 2 != 0;
        out.add(L, negative ? -(c * factor) : c * factor);
    }
    return out;
}

bool duality_check(const SuperPartition& L) {
    const SymFun lhs = omega_qt(macdonald_P(L, Basis::powersum));
    const SuperPartition Lc = conjugate(L);
    // Q_{Λ′}(1/t, 1/q) with the prefactor (−1)^{C(m,2)} (q/t)^{|Λ|}.
    RatFun pre = RatFun::qt_power(L.n(), -static_cast<long>(L.n())) / substitute(norm_squared(Lc), kDualMap);
    if (binom2(L.m()) % 2) pre = -pre;
    SymFun rhs{Basis::powersum, L.m(), {}};
    for (const auto& [O, c] : macdonald_P(Lc, Basis::powersum).coeffs) rhs.add(O, substitute(c, kDualMap) * pre);
    return lhs == rhs;
}

}  // namespace supermac
