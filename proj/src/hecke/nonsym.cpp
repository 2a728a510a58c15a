#include "supermac/hecke.hpp"
#include "supermac/once_cache.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>

namespace supermac {

using modp::Fp;

template <class C>
C cherednik_eigenvalue(const Composition& eta, int i, const HeckeRing<C>& R) {
    const int N = static_cast<int>(eta.size());
    if (i < 1 || i > N) throw HeckeError("eigenvalue index out of range");
    const int v = eta[static_cast<std::size_t>(i - 1)];
    long lbar = 0;
    for (int k = 1; k <= N; ++k) {
        const int w = eta[static_cast<std::size_t>(k - 1)];
        if ((k < i && w >= v) || (k > i && w > v)) ++lbar;
    }
    return R.power(R.q, v) * R.power(R.t, -lbar);
}

RatFun cherednik_eigenvalue(const Composition& eta, int i) {
    return cherednik_eigenvalue(eta, i, exact_ring(static_cast<int>(eta.size())));
}

namespace {

Partition sorted_desc(const Composition& c) {
    Partition p = c;
    std::sort(p.begin(), p.end(), std::greater<>());
    return p;
}

/// One-line notation of the minimal permutation sending η⁺ to η: position i
/// holds the rank of η_i among the entries (larger first, ties left to right).
std::vector<int> min_perm(const Composition& eta) {
    std::vector<int> order(eta.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return eta[static_cast<std::size_t>(a)] > eta[static_cast<std::size_t>(b)];
    });
    std::vector<int> rank(eta.size());
    for (std::size_t r = 0; r < order.size(); ++r) rank[static_cast<std::size_t>(order[r])] = static_cast<int>(r);
    return rank;
}

/// Bruhat order u ≤ v by the tableau criterion on one-line notations.
bool bruhat_leq_perm(const std::vector<int>& u, const std::vector<int>& v) {
    for (std::size_t k = 1; k < u.size(); ++k) {
        std::vector<int> a(u.begin(), u.begin() + static_cast<long>(k)), b(v.begin(), v.begin() + static_cast<long>(k));
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        for (std::size_t j = 0; j < k; ++j)
            if (a[j] > b[j]) return false;
    }
    return true;
}

/// Sort key of a linear extension of ≺: larger η⁺ (lexicographically) first,
/// then shorter w_η.
struct BruhatKey {
    Partition plus;
    long length;
};
BruhatKey key_of(const Composition& c) { return {sorted_desc(c), inversions(min_perm(c))}; }
bool key_greater(const BruhatKey& a, const BruhatKey& b) {
    if (a.plus != b.plus) return a.plus > b.plus;
    return a.length < b.length;
}

void compositions_rec(int left, std::size_t pos, Composition& cur, std::vector<Composition>& out) {
    if (pos + 1 == cur.size()) {
        cur[pos] = left;
        out.push_back(cur);
        return;
    }
    for (int v = left; v >= 0; --v) {
        cur[pos] = v;
        compositions_rec(left - v, pos + 1, cur, out);
    }
}

}  // namespace

bool bruhat_less(const Composition& nu, const Composition& eta) {
    if (nu.size() != eta.size() || nu == eta) return false;
    const Partition a = sorted_desc(nu), b = sorted_desc(eta);
    if (std::accumulate(a.begin(), a.end(), 0) != std::accumulate(b.begin(), b.end(), 0)) return false;
    if (a != b) return dominates_leq(a, b);
    return bruhat_leq_perm(min_perm(eta), min_perm(nu));
}

bool vanishing_leq(const Composition& nu, const Composition& eta) {
    if (nu.size() != eta.size()) return false;
    std::vector<int> pi(nu.size());
    std::iota(pi.begin(), pi.end(), 0);
    do {
        bool ok = true;
        for (std::size_t i = 0; i < nu.size() && ok; ++i) {
            const int target = eta[static_cast<std::size_t>(pi[i])];
            ok = static_cast<int>(i) < pi[i] ? nu[i] < target : nu[i] <= target;
        }
        if (ok) return true;
    } while (std::next_permutation(pi.begin(), pi.end()));
    return false;
}

std::vector<Composition> compositions(int size, int N) {
    std::vector<Composition> out;
    if (N == 0) {
        if (size == 0) out.emplace_back();
        return out;
    }
    Composition cur(static_cast<std::size_t>(N), 0);
    compositions_rec(size, 0, cur, out);
    return out;
}

template <class C>
struct NonsymSolver<C>::Impl {
    HeckeRing<C> ring;
    OnceCache<Composition, BasicXPoly<C>> weighted_images;  // W x^κ with W = Σ_i i·Y_i
    OnceCache<Composition, BasicXPoly<C>> E;

    const BasicXPoly<C>& image(const Composition& k, std::map<Composition, BasicXPoly<C>>& local) {
        auto it = local.find(k);
        if (it != local.end()) return it->second;
        BasicXPoly<C> img = weighted_images.get(k, [&] {
            const BasicXPoly<C> mono = BasicXPoly<C>::monomial(k);
            BasicXPoly<C> w(ring.N);
            for (int i = 1; i <= ring.N; ++i) w += apply(HeckeOp::Y(i), mono, ring).scaled(C(i));
            return w;
        });
        return local.emplace(k, std::move(img)).first->second;
    }

    C weighted_eigenvalue(const Composition& eta) const {
        C lam(0);
        for (int i = 1; i <= ring.N; ++i) lam += C(i) * cherednik_eigenvalue(eta, i, ring);
        return lam;
    }

    BasicXPoly<C> solve(const Composition& eta) {
        int size = std::accumulate(eta.begin(), eta.end(), 0);
        std::vector<Composition> span;
        for (auto& nu : compositions(size, ring.N))
            if (nu == eta || bruhat_less(nu, eta)) span.push_back(std::move(nu));
        std::vector<BruhatKey> keys;
        std::vector<std::size_t> order(span.size());
        std::iota(order.begin(), order.end(), 0);
        for (const auto& nu : span) keys.push_back(key_of(nu));
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return key_greater(keys[a], keys[b]); });

        const C lam = weighted_eigenvalue(eta);
        std::map<Composition, BasicXPoly<C>> local;
        std::vector<std::pair<const Composition*, C>> done;
        BasicXPoly<C> out(ring.N);
        for (std::size_t idx : order) {
            const Composition& nu = span[idx];
            C b(0);
            if (nu == eta) {
                b = C(1);
            } else {
                C rhs(0);
                for (const auto& [k, bk] : done) rhs += bk * image(*k, local).coeff(nu);
                if (rhs.is_zero()) continue;
                const C diag = image(nu, local).coeff(nu);
                if (lam == diag) throw HeckeError("degenerate Cherednik spectrum");
                b = rhs / (lam - diag);
            }
            done.emplace_back(&nu, b);
            out.add_term(nu, b);
        }
        return out;
    }
};

template <class C>
NonsymSolver<C>::NonsymSolver(HeckeRing<C> ring) : impl_(new Impl{std::move(ring), {}, {}}) {}

template <class C>
NonsymSolver<C>::~NonsymSolver() {
    delete impl_;
}

template <class C>
const HeckeRing<C>& NonsymSolver<C>::ring() const {
    return impl_->ring;
}

template <class C>
BasicXPoly<C> NonsymSolver<C>::E(const Composition& eta) {
    if (static_cast<int>(eta.size()) != impl_->ring.N) throw HeckeError("composition length differs from N");
    for (int v : eta)
        if (v < 0) throw HeckeError("negative composition entry");
    return impl_->E.get(eta, [&] { return impl_->solve(eta); });
}

template <class C>
std::map<Composition, C> NonsymSolver<C>::expand_in_E(const BasicXPoly<C>& f) {
    std::map<Composition, C> out;
    BasicXPoly<C> rest = f;
    while (!rest.is_zero()) {
        auto top = rest.terms().begin();
        BruhatKey best = key_of(top->first);
        for (auto it = std::next(rest.terms().begin()); it != rest.terms().end(); ++it) {
            BruhatKey k = key_of(it->first);
            if (key_greater(k, best)) {
                best = std::move(k);
                top = it;
            }
        }
        const Composition mu = top->first;
        const C c = top->second;
        out.emplace(mu, c);
        rest -= E(mu).scaled(c);
        if (rest.coeff(mu) != C(0)) throw HeckeError("E-expansion failed to eliminate a leading monomial");
    }
    return out;
}

template class NonsymSolver<RatFun>;
template class NonsymSolver<Fp>;
template Fp cherednik_eigenvalue(const Composition&, int, const HeckeRing<Fp>&);
template RatFun cherednik_eigenvalue(const Composition&, int, const HeckeRing<RatFun>&);

namespace {

NonsymSolver<RatFun>& exact_solver(int N) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<NonsymSolver<RatFun>>> solvers;
    std::lock_guard lock(mu);
    auto& slot = solvers[N];
    if (!slot) slot = std::make_unique<NonsymSolver<RatFun>>(exact_ring(N));
    return *slot;
}

}  // namespace

XPoly nonsym_macdonald(const Composition& eta) {
    if (eta.empty()) return XPoly::constant(0, RatFun(1));
    return exact_solver(static_cast<int>(eta.size())).E(eta);
}

bool check_Ti_action(const Composition& eta, int i) {
    const int N = static_cast<int>(eta.size());
    if (i < 1 || i >= N) throw HeckeError("T_i index out of range");
    const auto R = exact_ring(N);
    const XPoly E = nonsym_macdonald(eta);
    const XPoly lhs = apply(HeckeOp::T(i), E, R);
    const std::size_t a = static_cast<std::size_t>(i - 1), b = a + 1;
    if (eta[a] == eta[b]) return lhs == E.scaled(R.t);
    Composition swapped = eta;
    std::swap(swapped[a], swapped[b]);
    const XPoly Es = nonsym_macdonald(swapped);
    const RatFun delta = cherednik_eigenvalue(eta, i) / cherednik_eigenvalue(eta, i + 1);
    const RatFun one(1), t = R.t;
    const RatFun diag = (t - one) / (one - delta.inverse());
    const RatFun off = eta[a] < eta[b] ? t : (one - t * delta) * (one - delta / t) / ((one - delta) * (one - delta));
    return lhs == E.scaled(diag) + Es.scaled(off);
}

bool stability_check(const Composition& eta) {
    const int N = static_cast<int>(eta.size());
    if (N == 0) return true;
    const XPoly E = nonsym_macdonald(eta);
    const Composition minus(eta.begin(), eta.end() - 1);
    const XPoly last = set_zero(E, N);
    if (eta.back() == 0 ? last != nonsym_macdonald(minus) : !last.is_zero()) return false;
    if (std::count(eta.begin(), eta.end(), 0) != 1) return true;
    const int i = static_cast<int>(std::find(eta.begin(), eta.end(), 0) - eta.begin()) + 1;
    Composition removed = eta;
    removed.erase(removed.begin() + (i - 1));
    if (set_zero(E, i) != nonsym_macdonald(removed)) return false;
    for (int j = i + 1; j <= N; ++j)
        if (!set_zero(E, j).is_zero()) return false;
    return true;
}

std::set<Composition> pieri_bound_set(const Composition& eta, int p) {
    Composition top = eta;
    for (int& v : top) ++v;
    std::set<Composition> out;
    const int size = std::accumulate(eta.begin(), eta.end(), 0) + p;
    for (const auto& mu : compositions(size, static_cast<int>(eta.size())))
        if (vanishing_leq(eta, mu) && vanishing_leq(mu, top)) out.insert(mu);
    return out;
}

namespace {

template <class C>
std::set<Composition> support_with(NonsymSolver<C>& solver, const Composition& eta, const std::vector<int>& idx) {
    const int N = static_cast<int>(eta.size());
    std::vector<int> shift(static_cast<std::size_t>(N), 0);
    for (int i : idx) {
        if (i < 1 || i > N || shift[static_cast<std::size_t>(i - 1)]) throw HeckeError("indices must be distinct and in 1..N");
        shift[static_cast<std::size_t>(i - 1)] = 1;
    }
    const BasicXPoly<C> f = BasicXPoly<C>::monomial(shift) * solver.E(eta);
    std::set<Composition> out;
    for (const auto& [mu, c] : solver.expand_in_E(f)) out.insert(mu);
    return out;
}

}  // namespace

std::set<Composition> pieri_support_set(const Composition& eta, const std::vector<int>& idx, bool exact) {
    const int N = static_cast<int>(eta.size());
    if (exact) return support_with(exact_solver(N), eta, idx);
    std::set<Composition> out;
    for (auto [q0, t0] : {std::pair<std::uint64_t, std::uint64_t>{1234577, 7654337}, {271828183, 314159269}}) {
        NonsymSolver<Fp> solver(mod_ring(N, q0, t0));
        out.merge(support_with(solver, eta, idx));
    }
    return out;
}

}  // namespace supermac
