// Transition matrices between the m-basis and the e-/p-bases.
//
// The coefficient of m_Ω in X_Λ is the coefficient of θ_1⋯θ_m x^Ω in the
// product of the factors of X_Λ.  Instead of expanding that product we count
// the ways of distributing the factors over the variables, one factor at a
// time, memoizing on (factor, remaining exponents, θ's already used).

#include "supermac/superpoly.hpp"
#include "supermac/once_cache.hpp"

#include <bit>
#include <unordered_map>

namespace supermac {

namespace {

struct Factor {
    int k;
    bool tilde;
};

class EntryCounter {
public:
    EntryCounter(const SuperPartition& L, const SuperPartition& O, Basis basis)
        : basis_(basis), m_(O.m()) {
        for (int e : O.parts(O.length())) rem_.push_back(static_cast<std::uint8_t>(e));
        for (int k : L.a()) factors_.push_back({k, true});
        for (int k : L.s()) factors_.push_back({k, false});
    }

    BigInt count() { return go(0, 0); }

private:
    BigInt go(std::size_t idx, ThetaWord mask) {
        if (idx == factors_.size()) {
            if (mask != (ThetaWord{1} << m_) - 1) return 0;
            for (auto r : rem_)
                if (r) return 0;
            return 1;
        }
        std::string key(reinterpret_cast<const char*>(rem_.data()), rem_.size());
        key.push_back(static_cast<char>(idx));
        key.append(reinterpret_cast<const char*>(&mask), sizeof mask);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        BigInt total = 0;
        const Factor f = factors_[idx];
        const int N = static_cast<int>(rem_.size());
        auto with_theta = [&](auto&& body) {
            // θ_i must come from the first m variables; appending it on the
            // right passes the used θ's with larger index.
            for (int i = 0; i < m_; ++i) {
                const ThetaWord bit = ThetaWord{1} << i;
                if (mask & bit) continue;
                const int sign = (std::popcount(mask & ~((bit << 1) - 1)) & 1) ? -1 : 1;
                body(i, bit, sign);
            }
        };
        if (basis_ == Basis::powersum) {
            if (f.tilde) {
                with_theta([&](int i, ThetaWord bit, int sign) {
                    if (rem_[i] < f.k) return;
                    rem_[i] = static_cast<std::uint8_t>(rem_[i] - f.k);
                    BigInt c = go(idx + 1, mask | bit);
                    rem_[i] = static_cast<std::uint8_t>(rem_[i] + f.k);
                    if (sign < 0) total -= c; else total += c;
                });
            } else {
                for (int i = 0; i < N; ++i) {
                    if (rem_[i] < f.k) continue;
                    rem_[i] = static_cast<std::uint8_t>(rem_[i] - f.k);
                    total += go(idx + 1, mask);
                    rem_[i] = static_cast<std::uint8_t>(rem_[i] + f.k);
                }
            }
        } else {
            // e_k: a k-subset of variables, each exponent lowered by one.
            auto subsets = [&](auto&& self, int from, int left, int skip, ThetaWord next_mask) -> BigInt {
                if (left == 0) return go(idx + 1, next_mask);
                BigInt acc = 0;
                for (int j = from; j <= N - left; ++j) {
                    if (j == skip || rem_[j] == 0) continue;
                    --rem_[j];
                    acc += self(self, j + 1, left - 1, skip, next_mask);
                    ++rem_[j];
                }
                return acc;
            };
            if (f.tilde) {
                with_theta([&](int i, ThetaWord bit, int sign) {
                    BigInt c = subsets(subsets, 0, f.k, i, mask | bit);
                    if (sign < 0) total -= c; else total += c;
                });
            } else {
                total = subsets(subsets, 0, f.k, -1, mask);
            }
        }
        memo_.emplace(std::move(key), total);
        return total;
    }

    Basis basis_;
    int m_;
    std::vector<std::uint8_t> rem_;
    std::vector<Factor> factors_;
    std::unordered_map<std::string, BigInt> memo_;
};

/// Inverse of a nonsingular rational matrix by sparse-aware Gauss–Jordan.
std::vector<std::vector<BigRat>> invert(std::vector<std::vector<BigRat>> a) {
    const std::size_t n = a.size();
    std::vector<std::vector<BigRat>> inv(n, std::vector<BigRat>(n));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    std::vector<bool> done(n, false);
    std::vector<std::size_t> pivot_of(n);
    for (std::size_t c = n; c-- > 0;) {
        // Pick the sparsest unused row with a nonzero in column c.
        std::size_t best = n, best_nnz = n + 1;
        for (std::size_t r = 0; r < n; ++r) {
            if (done[r] || a[r][c] == 0) continue;
            std::size_t nnz = 0;
            for (const auto& x : a[r]) nnz += x != 0;
            if (nnz < best_nnz) best = r, best_nnz = nnz;
        }
        if (best == n) throw SuperpolyError("singular transition matrix");
        done[best] = true;
        pivot_of[c] = best;
        const BigRat piv_inv = 1 / a[best][c];
        std::vector<std::size_t> nz_a, nz_i;
        for (std::size_t j = 0; j < n; ++j) {
            if (a[best][j] != 0) a[best][j] *= piv_inv, nz_a.push_back(j);
            if (inv[best][j] != 0) inv[best][j] *= piv_inv, nz_i.push_back(j);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == best || a[r][c] == 0) continue;
            const BigRat f = a[r][c];
            for (std::size_t j : nz_a) a[r][j] -= f * a[best][j];
            for (std::size_t j : nz_i) inv[r][j] -= f * inv[best][j];
        }
    }
    // Row pivot_of[c] of the reduced system now expresses unit column c.
    std::vector<std::vector<BigRat>> out(n);
    for (std::size_t c = 0; c < n; ++c) out[c] = std::move(inv[pivot_of[c]]);
    return out;
}

std::shared_ptr<const Transition> build_transition(int n, int m, Basis basis) {
    auto t = std::make_shared<Transition>();
    t->n = n;
    t->m = m;
    t->basis = basis;
    t->index = enumerate(n, m);
    const std::size_t B = t->index.size();
    for (std::size_t i = 0; i < B; ++i) t->position.emplace(t->index[i], i);
    t->to_m.assign(B, std::vector<BigRat>(B));
    if (basis == Basis::monomial) {
        for (std::size_t i = 0; i < B; ++i) t->to_m[i][i] = 1;
        t->from_m = t->to_m;
        return t;
    }
    for (std::size_t i = 0; i < B; ++i)
        for (std::size_t j = 0; j < B; ++j) t->to_m[i][j] = transition_entry(t->index[i], t->index[j], basis);
    t->from_m = invert(t->to_m);
    return t;
}

}  // namespace

BigRat transition_entry(const SuperPartition& L, const SuperPartition& O, Basis basis) {
    if (L.n() != O.n() || L.m() != O.m()) return 0;
    if (basis == Basis::monomial) return L == O ? 1 : 0;
    if (basis == Basis::macdonald) throw SuperpolyError("transition_entry: the Macdonald basis is not classical");
    return BigRat(EntryCounter(L, O, basis).count());
}

std::shared_ptr<const Transition> transition(int n, int m, Basis basis) {
    if (basis == Basis::macdonald) throw SuperpolyError("transition: the Macdonald basis is handled by its own module");
    static OnceCache<std::tuple<int, int, int>, std::shared_ptr<const Transition>> cache;
    return cache.get({n, m, static_cast<int>(basis)}, [&] { return build_transition(n, m, basis); });
}

namespace {

/// Groups keys by total degree; each group is one (n|m) block.
std::map<int, std::vector<std::pair<SuperPartition, RatFun>>> blocks(const SymFun& f) {
    std::map<int, std::vector<std::pair<SuperPartition, RatFun>>> out;
    for (const auto& [L, c] : f.coeffs) {
        if (L.m() != f.m) throw SuperpolyError("SymFun key " + L.str() + " has the wrong fermionic degree");
        out[L.n()].emplace_back(L, c);
    }
    return out;
}

}  // namespace

SymFun convert(const SymFun& f, Basis target) {
    if (f.basis == target) return f;
    if (f.basis == Basis::macdonald || target == Basis::macdonald)
        throw SuperpolyError("convert: use the macdonald module for the Macdonald basis");
    SymFun out{target, f.m, {}};
    for (const auto& [n, items] : blocks(f)) {
        auto src = transition(n, f.m, f.basis);
        auto dst = transition(n, f.m, target);
        const std::size_t B = src->index.size();
        // Coefficients in m-basis, then in the target basis.
        std::vector<RatSum> in_m(B);
        for (const auto& [L, c] : items) {
            const auto& row = src->to_m[src->position.at(L)];
            for (std::size_t j = 0; j < B; ++j)
                if (row[j] != 0) in_m[j].add(c, row[j]);
        }
        std::vector<RatFun> mc(B);
        for (std::size_t j = 0; j < B; ++j) mc[j] = in_m[j].result();
        std::vector<RatSum> acc(B);
        for (std::size_t j = 0; j < B; ++j) {
            if (mc[j].is_zero()) continue;
            const auto& row = dst->from_m[j];
            for (std::size_t k = 0; k < B; ++k)
                if (row[k] != 0) acc[k].add(mc[j], row[k]);
        }
        for (std::size_t k = 0; k < B; ++k) out.add(dst->index[k], acc[k].result());
    }
    return out;
}

SymFun to_basis(const SuperPolyN& f, Basis basis, int m, int n) {
    if (basis == Basis::macdonald) throw SuperpolyError("to_basis: the Macdonald basis is handled by its own module");
    const int N = f.n_vars();
    for (const auto& [mono, c] : f.terms()) {
        int deg = 0;
        for (auto e : mono.x) deg += e;
        if (deg != n || std::popcount(mono.theta) != m)
            throw SuperpolyError("to_basis: input is not homogeneous of bidegree (" + std::to_string(n) + "|" +
                                 std::to_string(m) + ")");
    }
    if (!f.is_symmetric()) throw SuperpolyError("to_basis: input is not symmetric");
    SymFun in_m{Basis::monomial, m, {}};
    const ThetaWord lead = (ThetaWord{1} << m) - 1;
    for (const auto& L : enumerate(n, m)) {
        if (L.length() > N) {
            throw SuperpolyError("to_basis: " + std::to_string(N) + " variables cannot resolve bidegree (" +
                                 std::to_string(n) + "|" + std::to_string(m) + ")");
        }
        SuperMonomial mono{lead, {}};
        for (int e : L.parts(N)) mono.x.push_back(static_cast<std::uint8_t>(e));
        in_m.add(L, f.coeff(mono));
    }
    return convert(in_m, basis);
}

SuperPolyN expand(const SymFun& f, int N) {
    SuperPolyN out(N);
    for (const auto& [L, c] : f.coeffs) {
        switch (f.basis) {
            case Basis::monomial: out += expand_monomial(L, N).scaled(c); break;
            case Basis::elementary: out += expand_e(L, N).scaled(c); break;
            case Basis::powersum: out += expand_p(L, N).scaled(c); break;
            case Basis::macdonald: throw SuperpolyError("expand: convert Macdonald expansions first");
        }
    }
    return out;
}

std::pair<int, SuperPartition> p_product(const SuperPartition& L, const SuperPartition& O) {
    std::vector<int> a = L.a();
    a.insert(a.end(), O.a().begin(), O.a().end());
    int sign = 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            if (a[i] == a[j]) return {0, SuperPartition()};
            if (a[i] < a[j]) sign = -sign;
        }
    std::sort(a.rbegin(), a.rend());
    std::vector<int> s = L.s();
    s.insert(s.end(), O.s().begin(), O.s().end());
    std::sort(s.rbegin(), s.rend());
    return {sign, SuperPartition(std::move(a), std::move(s))};
}

SymFun multiply_p(const SymFun& f, const SymFun& g) {
    const SymFun fp = convert(f, Basis::powersum), gp = convert(g, Basis::powersum);
    SymFun out{Basis::powersum, f.m + g.m, {}};
    for (const auto& [L, a] : fp.coeffs)
        for (const auto& [O, b] : gp.coeffs) {
            auto [sign, G] = p_product(L, O);
            if (sign == 0) continue;
            RatFun c = a * b;
            out.add(G, sign < 0 ? -c : c);
        }
    return out;
}

}  // namespace supermac
