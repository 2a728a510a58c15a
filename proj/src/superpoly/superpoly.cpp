#include "supermac/superpoly.hpp"

#include <algorithm>
#include <bit>

namespace supermac {

std::vector<int> theta_indices(ThetaWord w) {
    std::vector<int> out;
    for (int i = 0; w != 0; ++i, w >>= 1)
        if (w & 1u) out.push_back(i + 1);
    return out;
}

std::pair<int, ThetaWord> theta_product(ThetaWord w1, ThetaWord w2) {
    if (w1 & w2) return {0, 0};
    // Each θ_j of w2 moves left past the θ_i of w1 with i > j.
    int swaps = 0;
    for (ThetaWord rest = w2; rest != 0; rest &= rest - 1) {
        const ThetaWord low = rest & (~rest + 1);
        swaps += std::popcount(w1 & ~((low << 1) - 1));
    }
    return {(swaps & 1) ? -1 : 1, w1 | w2};
}

namespace {

/// Sign and word of θ_{i1} θ_{i2} ⋯ for an arbitrary index sequence (1-based).
std::pair<int, ThetaWord> theta_sequence(const std::vector<int>& idx) {
    int sign = 1;
    ThetaWord w = 0;
    for (int i : idx) {
        auto [s, nw] = theta_product(w, ThetaWord{1} << (i - 1));
        if (s == 0) return {0, 0};
        sign *= s;
        w = nw;
    }
    return {sign, w};
}

void check_index(int i, int N, const char* what) {
    if (i < 1 || i > N) throw SuperpolyError(std::string(what) + ": variable index out of range");
}

}  // namespace

SuperPolyN SuperPolyN::constant(int n_vars, const RatFun& c) {
    return term(n_vars, 0, std::vector<std::uint8_t>(n_vars, 0), c);
}

SuperPolyN SuperPolyN::term(int n_vars, ThetaWord w, std::vector<std::uint8_t> exps, const RatFun& c) {
    if (static_cast<int>(exps.size()) != n_vars) throw SuperpolyError("exponent vector has the wrong length");
    SuperPolyN f(n_vars);
    f.add_term(SuperMonomial{w, std::move(exps)}, c);
    return f;
}

RatFun SuperPolyN::coeff(const SuperMonomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? RatFun() : it->second;
}

void SuperPolyN::add_term(const SuperMonomial& mono, const RatFun& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(mono, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

SuperPolyN& SuperPolyN::operator+=(const SuperPolyN& o) {
    if (o.n_ != n_) throw SuperpolyError("superpolynomials in different numbers of variables");
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
}

SuperPolyN& SuperPolyN::operator-=(const SuperPolyN& o) {
    if (o.n_ != n_) throw SuperpolyError("superpolynomials in different numbers of variables");
    for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
    return *this;
}

SuperPolyN operator*(const SuperPolyN& a, const SuperPolyN& b) {
    if (a.n_ != b.n_) throw SuperpolyError("superpolynomials in different numbers of variables");
    SuperPolyN out(a.n_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            auto [sign, w] = theta_product(ma.theta, mb.theta);
            if (sign == 0) continue;
            SuperMonomial mono{w, ma.x};
            for (int i = 0; i < a.n_; ++i) mono.x[i] = static_cast<std::uint8_t>(mono.x[i] + mb.x[i]);
            RatFun c = ca * cb;
            out.add_term(mono, sign < 0 ? -c : c);
        }
    return out;
}

SuperPolyN multiply(const SuperPolyN& f, const SuperPolyN& g) { return f * g; }

SuperPolyN SuperPolyN::scaled(const RatFun& c) const {
    SuperPolyN out(n_);
    if (c.is_zero()) return out;
    for (const auto& [mono, x] : terms_) out.terms_.emplace(mono, x * c);
    return out;
}

SuperPolyN SuperPolyN::swapped(int i) const {
    if (i < 1 || i >= n_) throw SuperpolyError("swapped: index out of range");
    const ThetaWord bi = ThetaWord{1} << (i - 1), bj = bi << 1;
    SuperPolyN out(n_);
    for (const auto& [mono, c] : terms_) {
        SuperMonomial img = mono;
        std::swap(img.x[i - 1], img.x[i]);
        const bool hi = mono.theta & bi, hj = mono.theta & bj;
        img.theta = (mono.theta & ~(bi | bj)) | (hi ? bj : 0) | (hj ? bi : 0);
        out.terms_.emplace(std::move(img), (hi && hj) ? -c : c);
    }
    return out;
}

SuperPolyN SuperPolyN::permuted(const std::vector<int>& sigma) const {
    if (static_cast<int>(sigma.size()) != n_) throw SuperpolyError("permuted: permutation has the wrong length");
    SuperPolyN out(n_);
    for (const auto& [mono, c] : terms_) {
        SuperMonomial img{0, std::vector<std::uint8_t>(n_, 0)};
        for (int j = 0; j < n_; ++j) img.x[sigma[j] - 1] = mono.x[j];
        std::vector<int> idx;
        for (int j : theta_indices(mono.theta)) idx.push_back(sigma[j - 1]);
        auto [sign, w] = theta_sequence(idx);
        img.theta = w;
        out.terms_.emplace(std::move(img), sign < 0 ? -c : c);
    }
    return out;
}

bool SuperPolyN::is_symmetric() const {
    for (int i = 1; i < n_; ++i)
        if (swapped(i) != *this) return false;
    return true;
}

std::string SuperPolyN::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [mono, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += c.str();
        for (int i : theta_indices(mono.theta)) out += "*theta" + std::to_string(i);
        for (int i = 0; i < n_; ++i) {
            if (mono.x[i] == 0) continue;
            out += "*x" + std::to_string(i + 1);
            if (mono.x[i] > 1) out += "^" + std::to_string(mono.x[i]);
        }
    }
    return out;
}

SuperPolyN theta_derivative(const SuperPolyN& f, int i) {
    check_index(i, f.n_vars(), "theta_derivative");
    const ThetaWord bit = ThetaWord{1} << (i - 1);
    SuperPolyN out(f.n_vars());
    for (const auto& [mono, c] : f.terms()) {
        if (!(mono.theta & bit)) continue;
        const int passed = std::popcount(mono.theta & (bit - 1));
        out.add_term(SuperMonomial{mono.theta & ~bit, mono.x}, (passed & 1) ? -c : c);
    }
    return out;
}

SuperPolyN restrict(const SuperPolyN& f, int i) {
    check_index(i, f.n_vars(), "restrict");
    const ThetaWord bit = ThetaWord{1} << (i - 1);
    SuperPolyN out(f.n_vars() - 1);
    for (const auto& [mono, c] : f.terms()) {
        if ((mono.theta & bit) || mono.x[i - 1] != 0) continue;
        SuperMonomial img{(mono.theta & (bit - 1)) | ((mono.theta >> 1) & ~(bit - 1)), mono.x};
        img.x.erase(img.x.begin() + (i - 1));
        out.add_term(img, c);
    }
    return out;
}

std::string basis_name(Basis b) {
    switch (b) {
        case Basis::monomial: return "monomial";
        case Basis::elementary: return "elementary";
        case Basis::powersum: return "powersum";
        case Basis::macdonald: return "macdonald";
    }
    return "?";
}

Basis parse_basis(const std::string& s) {
    if (s == "m" || s == "monomial") return Basis::monomial;
    if (s == "e" || s == "elementary") return Basis::elementary;
    if (s == "p" || s == "powersum") return Basis::powersum;
    if (s == "P" || s == "macdonald") return Basis::macdonald;
    throw SuperpolyError("unknown basis '" + s + "' (expected m, e, p or P)");
}

SuperPolyN expand_monomial(const SuperPartition& L, int N) {
    SuperPolyN out(N);
    if (N < L.length()) return out;
    const int m = L.m();
    const std::vector<int> parts = L.parts(N);
    std::vector<int> bosonic(parts.begin() + m, parts.end());
    std::sort(bosonic.begin(), bosonic.end());

    // Injective placement of the fermionic parts, then every distinct
    // arrangement of the bosonic multiset in the free slots.
    std::vector<int> place(m);
    std::vector<bool> used(N, false);
    auto fill = [&](auto&& self, int k) -> void {
        if (k == m) {
            std::vector<int> slots;
            for (int j = 0; j < N; ++j)
                if (!used[j]) slots.push_back(j);
            auto [sign, w] = theta_sequence([&] {
                std::vector<int> idx;
                for (int p : place) idx.push_back(p + 1);
                return idx;
            }());
            std::vector<int> arr = bosonic;
            do {
                SuperMonomial mono{w, std::vector<std::uint8_t>(N, 0)};
                for (int i = 0; i < m; ++i) mono.x[place[i]] = static_cast<std::uint8_t>(parts[i]);
                for (std::size_t j = 0; j < slots.size(); ++j) mono.x[slots[j]] = static_cast<std::uint8_t>(arr[j]);
                out.add_term(mono, RatFun(sign));
            } while (std::next_permutation(arr.begin(), arr.end()));
            return;
        }
        for (int j = 0; j < N; ++j) {
            if (used[j]) continue;
            used[j] = true;
            place[k] = j;
            self(self, k + 1);
            used[j] = false;
        }
    };
    fill(fill, 0);
    return out;
}

SuperPolyN elementary_factor(int k, bool tilde, int N) {
    if (tilde) return expand_monomial(SuperPartition({0}, std::vector<int>(k, 1)), N);
    return expand_monomial(SuperPartition({}, std::vector<int>(k, 1)), N);
}

SuperPolyN powersum_factor(int k, bool tilde, int N) {
    SuperPolyN out(N);
    for (int i = 0; i < N; ++i) {
        std::vector<std::uint8_t> x(N, 0);
        x[i] = static_cast<std::uint8_t>(k);
        out.add_term(SuperMonomial{tilde ? ThetaWord{1} << i : 0, std::move(x)}, RatFun(1));
    }
    return out;
}

namespace {

template <class Factor>
SuperPolyN expand_product(const SuperPartition& L, int N, Factor factor) {
    SuperPolyN out = SuperPolyN::constant(N, RatFun(1));
    for (int k : L.a()) out = out * factor(k, true, N);
    for (int k : L.s()) out = out * factor(k, false, N);
    return out;
}

}  // namespace

SuperPolyN expand_e(const SuperPartition& L, int N) { return expand_product(L, N, elementary_factor); }
SuperPolyN expand_p(const SuperPartition& L, int N) { return expand_product(L, N, powersum_factor); }

}  // namespace supermac
