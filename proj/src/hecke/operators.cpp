#include "supermac/hecke.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace supermac {

using modp::Fp;

Composition parse_composition(std::string_view text) {
    Composition out;
    std::size_t pos = 0;
    if (text.empty()) return out;
    while (true) {
        std::size_t end = pos;
        while (end < text.size() && text[end] >= '0' && text[end] <= '9') ++end;
        if (end == pos || end - pos > 3)
            throw HeckeError("malformed composition at position " + std::to_string(pos) + ": expected a part");
        out.push_back(std::stoi(std::string(text.substr(pos, end - pos))));
        if (end == text.size()) break;
        if (text[end] != ',')
            throw HeckeError("malformed composition at position " + std::to_string(end) + ": expected ','");
        pos = end + 1;
    }
    return out;
}

std::string composition_str(const Composition& c) {
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(c[i]);
    }
    return s;
}

std::string to_string(const XPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest degree first, then lexicographically largest exponent vector.
    std::vector<const std::pair<const std::vector<int>, RatFun>*> terms;
    for (const auto& kv : f.terms()) terms.push_back(&kv);
    std::stable_sort(terms.begin(), terms.end(), [](auto* a, auto* b) {
        const int da = std::accumulate(a->first.begin(), a->first.end(), 0);
        const int db = std::accumulate(b->first.begin(), b->first.end(), 0);
        return da != db ? da > db : a->first > b->first;
    });
    for (const auto* kv : terms) {
        if (!first) os << " + ";
        first = false;
        os << '(' << kv->second.str() << ')';
        for (std::size_t i = 0; i < kv->first.size(); ++i) {
            if (kv->first[i] == 0) continue;
            os << "*x" << i + 1;
            if (kv->first[i] > 1) os << '^' << kv->first[i];
        }
    }
    return os.str();
}

std::string to_json(const XPoly& f) {
    std::ostringstream os;
    os << "{\"N\":" << f.n_vars() << ",\"terms\":[";
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        if (!first) os << ',';
        first = false;
        os << "{\"c\":\"" << c.str() << "\",\"x\":\"" << composition_str(e) << "\"}";
    }
    os << "]}";
    return os.str();
}

template <>
RatFun HeckeRing<RatFun>::power(const RatFun& base, long k) const {
    return base.pow(k);
}

template <>
Fp HeckeRing<Fp>::power(const Fp& base, long k) const {
    Fp b = k < 0 ? base.inverse() : base;
    unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
    Fp r(1);
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

HeckeRing<RatFun> exact_ring(int N) { return {N, RatFun::q(), RatFun::t()}; }

HeckeRing<Fp> mod_ring(int N, std::uint64_t q0, std::uint64_t t0) { return {N, Fp::raw(q0), Fp::raw(t0)}; }

namespace {

template <class C>
using Poly = BasicXPoly<C>;
using Exps = std::vector<int>;

void check_index(int i, int lo, int hi, const char* what) {
    if (i < lo || i > hi) throw HeckeError(std::string(what) + " index " + std::to_string(i) + " out of range");
}

/// (K f − f)/(x_i − x_{i+1}) monomial by monomial (0-based a = i − 1, b = i).
template <class C>
Poly<C> divided_difference(const Poly<C>& f, int i) {
    const std::size_t a = static_cast<std::size_t>(i - 1), b = a + 1;
    Poly<C> out(f.n_vars());
    for (const auto& [e, c] : f.terms()) {
        const int al = e[a], be = e[b];
        if (al == be) continue;
        const int lo = std::min(al, be), d = std::abs(al - be);
        const C sign = al > be ? -c : c;
        Exps g = e;
        for (int k = 0; k < d; ++k) {
            g[a] = lo + k;
            g[b] = lo + d - 1 - k;
            out.add_term(g, sign);
        }
    }
    return out;
}

template <class C>
Poly<C> shift_var(const Poly<C>& f, std::size_t var) {
    Poly<C> out(f.n_vars());
    for (const auto& [e, c] : f.terms()) {
        Exps g = e;
        ++g[var];
        out.add_term(g, c);
    }
    return out;
}

template <class C>
Poly<C> apply_T(const Poly<C>& f, int i, const HeckeRing<C>& R) {
    check_index(i, 1, R.N - 1, "T");
    const Poly<C> D = divided_difference(f, i);
    Poly<C> out = f.scaled(R.t);
    out += shift_var(D, static_cast<std::size_t>(i - 1)).scaled(R.t);
    out -= shift_var(D, static_cast<std::size_t>(i));
    return out;
}

template <class C>
Poly<C> apply_T0(const Poly<C>& f, const HeckeRing<C>& R) {
    const int N = R.N;
    if (N < 2) return f.scaled(R.t);
    const std::size_t first = 0, last = static_cast<std::size_t>(N - 1);
    // D = (s₀f − f)/(q x_N − x_1) with s₀ = K_{1,N} τ_1 τ_N⁻¹; writing y = q x_N,
    // x^a = q^{-a_N} x_1^{a_1} y^{a_N} and s₀x^a = q^{-a_N} x_1^{a_N} y^{a_1}.
    Poly<C> D(N);
    for (const auto& [e, c] : f.terms()) {
        const int A = e[first], B = e[last];
        if (A == B) continue;
        const int lo = std::min(A, B), d = std::abs(A - B);
        const C base = A > B ? c : -c;
        Exps g = e;
        for (int k = 0; k < d; ++k) {
            const int ypow = lo + k;
            g[first] = lo + d - 1 - k;
            g[last] = ypow;
            D.add_term(g, base * R.power(R.q, ypow - B));
        }
    }
    Poly<C> out = f.scaled(R.t);
    out += shift_var(D, last).scaled(R.q * R.t);
    out -= shift_var(D, first);
    return out;
}

template <class C>
Poly<C> apply_Tinv(const Poly<C>& f, int i, const HeckeRing<C>& R) {
    const C tinv = R.power(R.t, -1);
    return f.scaled(tinv - C(1)) + apply_T(f, i, R).scaled(tinv);
}

template <class C>
Poly<C> apply_tau(const Poly<C>& f, int i, int sign, const HeckeRing<C>& R) {
    check_index(i, 1, R.N, "tau");
    Poly<C> out(f.n_vars());
    for (const auto& [e, c] : f.terms()) out.add_term(e, c * R.power(R.q, sign * e[static_cast<std::size_t>(i - 1)]));
    return out;
}

/// ω f(x_1..x_N) = f(q x_N, x_1, …, x_{N−1}).
template <class C>
Poly<C> apply_omega(const Poly<C>& f, const HeckeRing<C>& R) {
    Poly<C> out(f.n_vars());
    for (const auto& [e, c] : f.terms()) {
        Exps g(e.size());
        for (std::size_t k = 0; k + 1 < e.size(); ++k) g[k] = e[k + 1];
        if (!e.empty()) g.back() = e.front();
        out.add_term(g, e.empty() ? c : c * R.power(R.q, e.front()));
    }
    return out;
}

template <class C>
Poly<C> apply_Y(const Poly<C>& f, int i, const HeckeRing<C>& R) {
    check_index(i, 1, R.N, "Y");
    Poly<C> g = f;
    for (int j = i - 1; j >= 1; --j) g = apply_Tinv(g, j, R);
    g = apply_omega(g, R);
    for (int j = R.N - 1; j >= i; --j) g = apply_T(g, j, R);
    return g.scaled(R.power(R.t, i - R.N));
}

/// Σ_σ w(ℓ(σ)) T_σ f over the permutations of the variables lo..hi, by a
/// breadth-first walk of the weak order: T_{s_j σ} = T_j T_σ when s_j lengthens σ.
template <class C>
Poly<C> hecke_sum(const Poly<C>& f, int lo, int hi, bool minus, const HeckeRing<C>& R) {
    check_index(lo, 1, R.N + 1, "U");
    check_index(hi, lo - 1, R.N, "U");
    const int k = hi - lo + 1;
    if (k <= 1) return f;
    using Perm = std::vector<int>;
    Perm id(static_cast<std::size_t>(k));
    std::iota(id.begin(), id.end(), 0);
    std::map<Perm, Poly<C>> layer{{id, f}};
    Poly<C> total = f;
    const C step = minus ? -R.power(R.t, -1) : C(1);
    C weight(1);
    while (!layer.empty()) {
        std::map<Perm, Poly<C>> next;
        weight *= step;
        for (const auto& [perm, img] : layer) {
            std::vector<int> pos(static_cast<std::size_t>(k));
            for (int p = 0; p < k; ++p) pos[static_cast<std::size_t>(perm[static_cast<std::size_t>(p)])] = p;
            for (int j = 0; j + 1 < k; ++j) {
                if (pos[static_cast<std::size_t>(j)] > pos[static_cast<std::size_t>(j + 1)]) continue;
                Perm up = perm;
                std::swap(up[static_cast<std::size_t>(pos[static_cast<std::size_t>(j)])],
                          up[static_cast<std::size_t>(pos[static_cast<std::size_t>(j + 1)])]);
                if (next.contains(up)) continue;
                next.emplace(std::move(up), apply_T(img, lo + j, R));
            }
        }
        for (const auto& [perm, img] : next) total += img.scaled(weight);
        layer = std::move(next);
    }
    return total;
}

template <class C>
Poly<C> antisymmetrize(const Poly<C>& f, int lo, int hi, const HeckeRing<C>& R) {
    check_index(lo, 1, R.N + 1, "A");
    check_index(hi, lo - 1, R.N, "A");
    if (hi - lo + 1 <= 1) return f;
    std::vector<int> local(static_cast<std::size_t>(hi - lo + 1));
    std::iota(local.begin(), local.end(), lo);
    Poly<C> out(f.n_vars());
    do {
        std::vector<int> sigma(static_cast<std::size_t>(R.N));
        std::iota(sigma.begin(), sigma.end(), 1);
        std::copy(local.begin(), local.end(), sigma.begin() + lo - 1);
        const long inv = inversions(local);
        const Poly<C> img = permute_vars(f, sigma);
        out += inv % 2 ? img.scaled(C(-1)) : img;
    } while (std::next_permutation(local.begin(), local.end()));
    return out;
}

}  // namespace

template <class C>
BasicXPoly<C> permute_vars(const BasicXPoly<C>& f, const std::vector<int>& sigma) {
    if (static_cast<int>(sigma.size()) != f.n_vars()) throw HeckeError("permutation size mismatch");
    BasicXPoly<C> out(f.n_vars());
    for (const auto& [e, c] : f.terms()) {
        std::vector<int> g(e.size());
        for (std::size_t j = 0; j < e.size(); ++j) g[static_cast<std::size_t>(sigma[j] - 1)] = e[j];
        out.add_term(g, c);
    }
    return out;
}

template <class C>
BasicXPoly<C> set_zero(const BasicXPoly<C>& f, int i) {
    check_index(i, 1, f.n_vars(), "variable");
    BasicXPoly<C> out(f.n_vars() - 1);
    const std::size_t k = static_cast<std::size_t>(i - 1);
    for (const auto& [e, c] : f.terms()) {
        if (e[k] != 0) continue;
        std::vector<int> g = e;
        g.erase(g.begin() + static_cast<long>(k));
        out.add_term(g, c);
    }
    return out;
}

template <class C>
BasicXPoly<C> delta(int N, int lo, int hi, const C& s) {
    BasicXPoly<C> out = BasicXPoly<C>::constant(N, C(1));
    for (int i = lo; i <= hi; ++i)
        for (int j = i + 1; j <= hi; ++j) {
            BasicXPoly<C> lin(N);
            std::vector<int> e(static_cast<std::size_t>(N), 0);
            e[static_cast<std::size_t>(i - 1)] = 1;
            lin.add_term(e, s);
            e[static_cast<std::size_t>(i - 1)] = 0;
            e[static_cast<std::size_t>(j - 1)] = 1;
            lin.add_term(e, C(-1));
            out = out * lin;
        }
    return out;
}

template <class C>
BasicXPoly<C> divide_delta(const BasicXPoly<C>& f, int lo, int hi, const C& s) {
    BasicXPoly<C> cur = f;
    for (int i = lo; i <= hi; ++i)
        for (int j = i + 1; j <= hi; ++j) {
            // Long division by (s x_i − x_j) as a polynomial in x_j.
            const std::size_t xi = static_cast<std::size_t>(i - 1), xj = static_cast<std::size_t>(j - 1);
            BasicXPoly<C> rem = cur, quo(f.n_vars());
            while (!rem.is_zero()) {
                auto top = rem.terms().begin();
                for (auto it = rem.terms().begin(); it != rem.terms().end(); ++it)
                    if (it->first[xj] > top->first[xj]) top = it;
                if (top->first[xj] == 0) throw HeckeError("inexact division by a Vandermonde factor");
                const std::vector<int> orig = top->first;
                const C c = top->second;
                std::vector<int> e = orig;
                --e[xj];
                quo.add_term(e, -c);
                rem.add_term(orig, -c);  // −c x^{e} · (−x_j)
                ++e[xi];
                rem.add_term(e, c * s);        // −(−c) x^{e} · s x_i
            }
            cur = std::move(quo);
        }
    return cur;
}

template <class C>
BasicXPoly<C> apply(const HeckeOp& op, const BasicXPoly<C>& f, const HeckeRing<C>& R) {
    if (f.n_vars() != R.N) throw HeckeError("operator dimension does not match the polynomial");
    switch (op.kind) {
        case HeckeOp::Kind::T: return apply_T(f, op.i, R);
        case HeckeOp::Kind::Tinv: check_index(op.i, 1, R.N - 1, "T"); return apply_Tinv(f, op.i, R);
        case HeckeOp::Kind::T0: return apply_T0(f, R);
        case HeckeOp::Kind::tau: return apply_tau(f, op.i, 1, R);
        case HeckeOp::Kind::tau_inv: return apply_tau(f, op.i, -1, R);
        case HeckeOp::Kind::omega: return apply_omega(f, R);
        case HeckeOp::Kind::Y: return apply_Y(f, op.i, R);
        case HeckeOp::Kind::Uplus: return hecke_sum(f, op.lo, op.hi, false, R);
        case HeckeOp::Kind::Uminus: return hecke_sum(f, op.lo, op.hi, true, R);
        case HeckeOp::Kind::A: return antisymmetrize(f, op.lo, op.hi, R);
    }
    throw HeckeError("unknown operator");
}

#define SUPERMAC_INSTANTIATE(C)                                                                       \
    template BasicXPoly<C> apply(const HeckeOp&, const BasicXPoly<C>&, const HeckeRing<C>&);         \
    template BasicXPoly<C> permute_vars(const BasicXPoly<C>&, const std::vector<int>&);               \
    template BasicXPoly<C> set_zero(const BasicXPoly<C>&, int);                                        \
    template BasicXPoly<C> delta(int, int, int, const C&);                                             \
    template BasicXPoly<C> divide_delta(const BasicXPoly<C>&, int, int, const C&);

SUPERMAC_INSTANTIATE(RatFun)
SUPERMAC_INSTANTIATE(Fp)
#undef SUPERMAC_INSTANTIATE

}  // namespace supermac
