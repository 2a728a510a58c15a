#include "supermac/hecke.hpp"

#include <bit>

namespace supermac {

Composition reverse_composition(const SuperPartition& L, int N) {
    const int m = L.m();
    if (N < L.length() || N < m) throw HeckeError("too few variables for the superpartition");
    Composition out(L.a().rbegin(), L.a().rend());
    std::vector<int> s = L.s();
    s.resize(static_cast<std::size_t>(N - m), 0);
    out.insert(out.end(), s.rbegin(), s.rend());
    return out;
}

namespace {

/// Σ over the minimal coset representatives of S_N/(S_m × S_{N−m}) of
/// 𝒦_σ(θ_1⋯θ_m f): σ sends 1..m increasingly onto a subset I and m+1..N
/// increasingly onto its complement, so the θ-word θ_I needs no reordering.
SuperPolyN coset_sum(const XPoly& f, int m) {
    const int N = f.n_vars();
    SuperPolyN out(N);
    for (ThetaWord I = 0; I < (ThetaWord{1} << N); ++I) {
        if (std::popcount(I) != m) continue;
        std::vector<int> sigma;
        for (int j = 0; j < N; ++j)
            if (I >> j & 1) sigma.push_back(j + 1);
        for (int j = 0; j < N; ++j)
            if (!(I >> j & 1)) sigma.push_back(j + 1);
        const XPoly img = permute_vars(f, sigma);
        for (const auto& [e, c] : img.terms()) {
            std::vector<std::uint8_t> x(e.begin(), e.end());
            out.add_term(SuperMonomial{I, std::move(x)}, c);
        }
    }
    return out;
}

}  // namespace

SuperPolyN symmetrize_to_P(const SuperPartition& L, int N) {
    const int m = L.m();
    if (N < m) throw HeckeError("symmetrization needs N ≥ m");
    const Composition eta = reverse_composition(L, N);
    const auto R = exact_ring(N);
    XPoly g = apply(HeckeOp::Uplus(m + 1, N), nonsym_macdonald(eta), R);
    g = apply(HeckeOp::A(1, m), g, R);
    const MiscStats st = misc_stats(L, N);
    RatFun pre = (st.f_s * RatFun::qt_power(0, st.inv_s)).inverse();
    if (binom2(m) % 2) pre = -pre;
    return coset_sum(g.scaled(pre), m);
}

RatFun epsilon(const Partition& lambda, int N) {
    RatFun out;
    for (int i = 1; i <= N; ++i) out += RatFun::qt_power(part(lambda, static_cast<std::size_t>(i - 1)), 1 - i);
    return out;
}

SuperPolyN d1_operator(const SuperPolyN& f, D1Kind which) {
    const int N = f.n_vars();
    const auto R = exact_ring(N);
    SuperPolyN out(N);
    for (int m = 0; m <= N; ++m) {
        // π_{1..m}: the coefficient of θ_1⋯θ_m.
        const ThetaWord lead = (ThetaWord{1} << m) - 1;
        XPoly F(N);
        for (const auto& [mono, c] : f.terms())
            if (mono.theta == lead) F.add_term(std::vector<int>(mono.x.begin(), mono.x.end()), c);
        if (F.is_zero()) continue;
        const XPoly h = delta(N, 1, m, R.t) * divide_delta(F, 1, m, RatFun(1));
        XPoly Yh(N);
        for (int i = 1; i <= N; ++i) {
            const XPoly img = apply(HeckeOp::Y(i), h, R);
            Yh += which == D1Kind::circledast && i <= m ? img.scaled(R.q) : img;
        }
        const XPoly r = delta(N, 1, m, RatFun(1)) * divide_delta(Yh, 1, m, R.t);
        out += coset_sum(r, m);
    }
    return out;
}

}  // namespace supermac
