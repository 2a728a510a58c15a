// Gram–Schmidt construction of P_Λ.
//
// Everything runs in monomial coordinates on a down-closed set S.  The Gram
// matrix of the m-basis is G(Γ,Ω) = Σ_ρ A(Γ,ρ) A(Ω,ρ) ⟨p_ρ,p_ρ⟩ with A the
// m→p transition; it is stored multiplied by a common t-denominator D so that
// its entries are polynomials.  A uniform scale does not change P_Λ, and the
// norms are divided by D at the end.
//
// The elimination is written once over an abstract field so the exact run
// (over Q(q,t)) and the modular run (over F_p at a point) share it.

#include "supermac/macdonald.hpp"
#include "supermac/modp.hpp"
#include "supermac/once_cache.hpp"

#include "json.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <thread>

#include <unistd.h>

namespace supermac {

RatFun z_super(const SuperPartition& L) {
    BigInt z = 1;
    std::map<int, int> mult;
    for (int k : L.s()) ++mult[k];
    for (auto [k, mk] : mult) {
        for (int i = 0; i < mk; ++i) z *= k;
        for (int i = 2; i <= mk; ++i) z *= i;
    }
    long asum = 0;
    for (int a : L.a()) asum += a;
    RatFun out = RatFun(z) * RatFun::qt_power(asum, 0);
    for (int k : L.s()) out *= one_minus_qt(k, 0) / one_minus_qt(0, k);
    return out;
}

RatFun scalar_product(const SymFun& f, const SymFun& g) {
    if (f.m != g.m) return RatFun();
    const SymFun fp = convert(f, Basis::powersum), gp = convert(g, Basis::powersum);
    RatSum acc;
    for (const auto& [L, a] : fp.coeffs) {
        auto it = gp.coeffs.find(L);
        if (it != gp.coeffs.end()) acc.add(a * it->second * z_super(L));
    }
    RatFun r = acc.result();
    return binom2(f.m) % 2 ? -r : r;
}

namespace {

/// Φ_d(t) as a polynomial in t.
QTPoly cyclotomic(int d) {
    static OnceCache<int, QTPoly> cache;
    return cache.get(d, [d] {
        QTPoly r = QTPoly::monomial(1, 0, static_cast<std::uint32_t>(d)) - QTPoly(1);
        for (int e = 1; e < d; ++e)
            if (d % e == 0) r = *r.divide(cyclotomic(e));
        return r;
    });
}

struct GramData {
    int n = 0, m = 0;
    std::vector<SuperPartition> order;
    std::vector<std::vector<RatFun>> G;      // D · ⟨m_i, m_j⟩
    RatFun D;                                // common denominator
    std::vector<std::vector<int>> below;     // strictly dominated positions (all > i)
};

GramData build_gram(int n, int m, const std::vector<SuperPartition>& order) {
    GramData g;
    g.n = n;
    g.m = m;
    g.order = order;
    const auto T = transition(n, m, Basis::powersum);
    const std::size_t B = T->index.size(), d = order.size();

    // D = Π_d Φ_d(t)^{e_d}, e_d the largest number of parts divisible by d.
    std::map<int, int> expo;
    for (const auto& rho : T->index) {
        std::map<int, int> here;
        for (int k : rho.s())
            for (int e = 1; e <= k; ++e)
                if (k % e == 0) ++here[e];
        for (auto [e, c] : here) expo[e] = std::max(expo[e], c);
    }
    QTPoly D(1);
    for (auto [e, c] : expo) D *= cyclotomic(e).pow(static_cast<unsigned>(c));
    g.D = RatFun(D);

    const bool negate = binom2(m) % 2;
    std::vector<QTPoly> zD(B);  // sign · z_ρ · D, polynomial
    for (std::size_t r = 0; r < B; ++r) {
        RatFun v = z_super(T->index[r]) * g.D;
        if (!v.is_polynomial()) throw MacdonaldError("internal: common denominator does not clear z");
        zD[r] = negate ? -v.num() : v.num();
    }

    std::vector<const std::vector<BigRat>*> rows(d);
    for (std::size_t i = 0; i < d; ++i) rows[i] = &T->from_m[T->position.at(order[i])];
    g.G.assign(d, std::vector<RatFun>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
            // Integer combination over a common denominator of the weights.
            BigInt den = 1;
            std::vector<std::pair<std::size_t, BigRat>> w;
            for (std::size_t r = 0; r < B; ++r) {
                const BigRat& a = (*rows[i])[r];
                const BigRat& b = (*rows[j])[r];
                if (a == 0 || b == 0) continue;
                w.emplace_back(r, a * b);
                den = lcm(den, w.back().second.get_den());
            }
            QTPoly num;
            for (const auto& [r, x] : w) num += zD[r].scaled(BigInt(x.get_num() * (den / x.get_den())));
            g.G[i][j] = g.G[j][i] = RatFun(num, QTPoly(den));
        }

    g.below.assign(d, {});
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            if (dominance_leq(order[j], order[i])) g.below[i].push_back(static_cast<int>(j));
    return g;
}

/// Exact field operations on RatFun.
struct RatOps {
    using T = RatFun;
    static T zero() { return RatFun(); }
    static T one() { return RatFun(1); }
    static bool is_zero(const T& x) { return x.is_zero(); }
    static T div(const T& a, const T& b) { return a / b; }
    static T neg(const T& a) { return -a; }
    /// Σ a_k b_k.
    static T dot(const std::vector<std::pair<const T*, const T*>>& terms) {
        RatSum acc;
        for (const auto& [a, b] : terms) acc.add(*a * *b);
        return acc.result();
    }
};

/// Arithmetic in F_p.
struct ModOps {
    using T = std::uint64_t;
    std::uint64_t p;
    T zero() const { return 0; }
    T one() const { return 1; }
    bool is_zero(T x) const { return x == 0; }
    T div(T a, T b) const {
        if (b == 0) throw MacdonaldError("modular Gram–Schmidt hit a vanishing norm");
        return modp::mul(a, modp::inv(b, p), p);
    }
    T neg(T a) const { return modp::neg(a, p); }
    T dot(const std::vector<std::pair<const T*, const T*>>& terms) const {
        T acc = 0;
        for (const auto& [a, b] : terms) acc = modp::add(acc, modp::mul(*a, *b, p), p);
        return acc;
    }
};

template <class Ops>
struct GSRun {
    std::vector<std::vector<typename Ops::T>> c;  // c[i][j]: coefficient of m_{order[j]} in P_{order[i]}
    std::vector<typename Ops::T> norm;            // ⟨m_i, P_i⟩ in the scaled form
};

template <class Ops>
GSRun<Ops> run_gram_schmidt(const std::vector<std::vector<typename Ops::T>>& G,
                            const std::vector<std::vector<int>>& below, const Ops& ops) {
    using T = typename Ops::T;
    const std::size_t d = G.size();
    GSRun<Ops> out;
    out.c.assign(d, std::vector<T>(d, ops.zero()));
    out.norm.assign(d, ops.zero());
    std::vector<std::vector<int>> support(d);  // nonzero positions of c[i]
    for (std::size_t i = d; i-- > 0;) {
        // k_j = ⟨m_i, P_j⟩ / ‖P_j‖² for every j strictly below i.
        std::vector<std::pair<int, T>> ks;
        for (int j : below[i]) {
            std::vector<std::pair<const T*, const T*>> terms;
            for (int l : support[j]) terms.emplace_back(&out.c[j][l], &G[i][l]);
            T pij = ops.dot(terms);
            if (!ops.is_zero(pij)) ks.emplace_back(j, ops.div(pij, out.norm[j]));
        }
        // c_i = e_i − Σ_j k_j c_j, one reduction per coordinate.
        std::vector<T> negk;
        negk.reserve(ks.size());
        for (const auto& [j, k] : ks) negk.push_back(ops.neg(k));
        out.c[i][i] = ops.one();
        for (std::size_t l = i + 1; l < d; ++l) {
            std::vector<std::pair<const T*, const T*>> terms;
            for (std::size_t a = 0; a < ks.size(); ++a) {
                const T& cjl = out.c[ks[a].first][l];
                if (!ops.is_zero(cjl)) terms.emplace_back(&negk[a], &cjl);
            }
            if (!terms.empty()) out.c[i][l] = ops.dot(terms);
        }
        for (std::size_t l = i; l < d; ++l)
            if (!ops.is_zero(out.c[i][l])) support[i].push_back(static_cast<int>(l));
        std::vector<std::pair<const T*, const T*>> terms;
        for (int l : support[i]) terms.emplace_back(&out.c[i][l], &G[i][l]);
        out.norm[i] = ops.dot(terms);
        if (ops.is_zero(out.norm[i])) throw MacdonaldError("singular Gram matrix");
    }
    return out;
}

MacdonaldTable exact_table(const GramData& g) {
    const GSRun<RatOps> run = run_gram_schmidt(g.G, g.below, RatOps{});
    MacdonaldTable t;
    t.n = g.n;
    t.m = g.m;
    t.index = g.order;
    for (std::size_t i = 0; i < g.order.size(); ++i) {
        SymFun P{Basis::monomial, g.m, {}};
        for (std::size_t l = i; l < g.order.size(); ++l) P.add(g.order[l], run.c[i][l]);
        t.P.emplace(g.order[i], std::move(P));
        t.norm2.emplace(g.order[i], run.norm[i] / g.D);
    }
    return t;
}

std::vector<SuperPartition> down_set(const SuperPartition& L) {
    std::vector<SuperPartition> out;
    for (const auto& O : enumerate(L.n(), L.m()))
        if (dominance_leq(O, L)) out.push_back(O);
    return out;
}

std::shared_ptr<const GramData> block_gram(int n, int m) {
    static OnceCache<std::pair<int, int>, std::shared_ptr<const GramData>> cache;
    return cache.get({n, m}, [&] { return std::make_shared<const GramData>(build_gram(n, m, enumerate(n, m))); });
}

std::shared_ptr<const GramData> downset_gram(const SuperPartition& L) {
    static OnceCache<SuperPartition, std::shared_ptr<const GramData>> cache;
    return cache.get(L, [&] { return std::make_shared<const GramData>(build_gram(L.n(), L.m(), down_set(L))); });
}

/// Blocks up to this size are built whole; larger ones per down-set.
constexpr std::size_t kWholeBlockLimit = 48;

bool use_whole_block(int n, int m) {
    static OnceCache<std::pair<int, int>, bool> cache;
    return cache.get({n, m}, [&] { return enumerate(n, m).size() <= kWholeBlockLimit; });
}

std::string cache_file(const std::string& dir, int n, int m, const std::string& tag) {
    std::string name = "P-n" + std::to_string(n) + "-m" + std::to_string(m) + "-v" + std::to_string(kTableFormatVersion);
    if (!tag.empty()) name += "-" + tag;
    return (std::filesystem::path(dir) / (name + ".json")).string();
}

std::optional<MacdonaldTable> load_cached(int n, int m, const std::string& tag) {
    const auto dir = cache_directory();
    if (!dir) return std::nullopt;
    std::ifstream in(cache_file(*dir, n, m, tag));
    if (!in) return std::nullopt;
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        MacdonaldTable t = table_from_json(ss.str());
        if (t.n == n && t.m == m) return t;
    } catch (const std::exception&) {
        // A damaged cache entry is rebuilt.
    }
    return std::nullopt;
}

void store_cached(const MacdonaldTable& t, const std::string& tag) {
    const auto dir = cache_directory();
    if (!dir) return;
    std::error_code ec;
    std::filesystem::create_directories(*dir, ec);
    if (ec) return;
    const std::string path = cache_file(*dir, t.n, t.m, tag);
    std::ostringstream suffix;
    suffix << ".tmp." << ::getpid() << "." << std::this_thread::get_id();
    const std::string tmp = path + suffix.str();
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << table_to_json(t) << '\n';
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) std::filesystem::remove(tmp, ec);
}

std::string downset_tag(const SuperPartition& L) {
    std::string s = "down-" + L.str();
    for (char& c : s) {
        if (c == ';') c = '_';
        if (c == ',') c = '.';
    }
    return s;
}

}  // namespace

std::optional<std::string> cache_directory() {
    if (const char* env = std::getenv("SUPERMAC_CACHE_DIR")) {
        if (*env == '\0') return std::nullopt;
        return std::string(env);
    }
    return std::string(".supermac-cache");
}

MacdonaldTable gram_schmidt_ordered(int n, int m, const std::vector<SuperPartition>& order) {
    return exact_table(build_gram(n, m, order));
}

std::shared_ptr<const MacdonaldTable> gram_schmidt_block(int n, int m) {
    static OnceCache<std::pair<int, int>, std::shared_ptr<const MacdonaldTable>> cache;
    return cache.get({n, m}, [&] {
        if (auto t = load_cached(n, m, "")) return std::make_shared<const MacdonaldTable>(std::move(*t));
        auto t = std::make_shared<const MacdonaldTable>(exact_table(*block_gram(n, m)));
        store_cached(*t, "");
        return t;
    });
}

std::shared_ptr<const MacdonaldTable> table_for(const SuperPartition& L) {
    if (use_whole_block(L.n(), L.m())) return gram_schmidt_block(L.n(), L.m());
    static OnceCache<SuperPartition, std::shared_ptr<const MacdonaldTable>> cache;
    return cache.get(L, [&] {
        const std::string tag = downset_tag(L);
        if (auto t = load_cached(L.n(), L.m(), tag)) return std::make_shared<const MacdonaldTable>(std::move(*t));
        auto t = std::make_shared<const MacdonaldTable>(exact_table(*downset_gram(L)));
        store_cached(*t, tag);
        return t;
    });
}

SymFun macdonald_P(const SuperPartition& L, Basis basis) {
    if (basis == Basis::macdonald) {
        SymFun f{Basis::macdonald, L.m(), {}};
        f.add(L, RatFun(1));
        return f;
    }
    return convert(table_for(L)->P.at(L), basis);
}

RatFun norm_squared(const SuperPartition& L) { return table_for(L)->norm2.at(L); }

RatFun norm_formula(const SuperPartition& L) {
    long asum = 0;
    for (int a : L.a()) asum += a;
    const Partition star = L.star(), circ = L.circ();
    RatFun out = RatFun::qt_power(asum, 0);
    for (const Cell& s : cells_B(L)) {
        const auto [a_star, l_star] = arm_leg(star, s);
        const auto [a_circ, l_circ] = arm_leg(circ, s);
        out *= one_minus_qt(a_star + 1, l_circ) / one_minus_qt(a_circ, l_star + 1);
    }
    return out;
}

namespace {

/// P-coefficients of an m-basis function of one bidegree by back-substitution
/// against the monic triangular P_Λ, generic over the field.
template <class Ops, class Lookup>
std::map<SuperPartition, typename Ops::T> solve_triangular(std::map<SuperPartition, typename Ops::T> rem,
                                                           const std::vector<SuperPartition>& order, Lookup lookup,
                                                           const Ops& ops) {
    std::map<SuperPartition, typename Ops::T> out;
    for (const auto& L : order) {
        auto it = rem.find(L);
        if (it == rem.end() || ops.is_zero(it->second)) continue;
        const typename Ops::T a = it->second;
        out.emplace(L, a);
        const typename Ops::T na = ops.neg(a);
        for (const auto& [O, c] : lookup(L)) {
            typename Ops::T& slot = rem.try_emplace(O, ops.zero()).first->second;
            std::vector<std::pair<const typename Ops::T*, const typename Ops::T*>> terms{{&na, &c}};
            const typename Ops::T one = ops.one();
            terms.emplace_back(&slot, &one);
            slot = ops.dot(terms);
        }
    }
    return out;
}

}  // namespace

SymFun to_macdonald(const SymFun& f) {
    if (f.basis == Basis::macdonald) return f;
    const SymFun fm = convert(f, Basis::monomial);
    std::map<int, std::map<SuperPartition, RatFun>> by_degree;
    for (const auto& [L, c] : fm.coeffs) by_degree[L.n()].emplace(L, c);
    SymFun out{Basis::macdonald, f.m, {}};
    for (auto& [n, rem] : by_degree) {
        const auto order = enumerate(n, f.m);
        auto lookup = [](const SuperPartition& L) -> std::map<SuperPartition, RatFun> {
            return table_for(L)->P.at(L).coeffs;
        };
        for (const auto& [L, c] : solve_triangular(std::move(rem), order, lookup, RatOps{})) out.add(L, c);
    }
    return out;
}

SymFun from_macdonald(const SymFun& f, Basis basis) {
    if (f.basis != Basis::macdonald) return convert(f, basis);
    SymFun acc{Basis::monomial, f.m, {}};
    std::map<SuperPartition, RatSum> sums;
    for (const auto& [L, c] : f.coeffs) {
        const auto table = table_for(L);
        for (const auto& [O, x] : table->P.at(L).coeffs) sums[O].add(c * x);
    }
    for (auto& [O, s] : sums) acc.add(O, s.result());
    return convert(acc, basis);
}

namespace {

struct ModTable {
    std::vector<SuperPartition> order;
    std::vector<std::vector<std::uint64_t>> c;
    std::vector<std::uint64_t> norm;  // true norms (divided by D)
};

std::optional<ModTable> modular_table(const GramData& g, std::uint64_t q0, std::uint64_t t0, std::uint64_t p) {
    const std::size_t d = g.order.size();
    std::vector<std::vector<std::uint64_t>> G(d, std::vector<std::uint64_t>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            auto v = g.G[i][j].eval_mod(q0, t0, p);
            if (!v) return std::nullopt;
            G[i][j] = *v;
        }
    auto Dv = g.D.eval_mod(q0, t0, p);
    if (!Dv || *Dv == 0) return std::nullopt;
    ModOps ops{p};
    try {
        auto run = run_gram_schmidt(G, g.below, ops);
        ModTable t{g.order, std::move(run.c), {}};
        for (auto x : run.norm) t.norm.push_back(ops.div(x, *Dv));
        return t;
    } catch (const MacdonaldError&) {
        return std::nullopt;
    }
}

}  // namespace

std::optional<std::uint64_t> norm_squared_mod(const SuperPartition& L, std::uint64_t q0, std::uint64_t t0,
                                              std::uint64_t p) {
    const auto g = use_whole_block(L.n(), L.m()) ? block_gram(L.n(), L.m()) : downset_gram(L);
    auto t = modular_table(*g, q0, t0, p);
    if (!t) return std::nullopt;
    for (std::size_t i = 0; i < t->order.size(); ++i)
        if (t->order[i] == L) return t->norm[i];
    throw MacdonaldError("internal: superpartition missing from its own table");
}

std::optional<std::map<SuperPartition, std::uint64_t>> to_macdonald_mod(const SymFun& f, std::uint64_t q0,
                                                                         std::uint64_t t0, std::uint64_t p) {
    const SymFun fm = convert(f, Basis::monomial);
    std::map<int, std::map<SuperPartition, std::uint64_t>> by_degree;
    for (const auto& [L, c] : fm.coeffs) {
        auto v = c.eval_mod(q0, t0, p);
        if (!v) return std::nullopt;
        if (*v) by_degree[L.n()].emplace(L, *v);
    }
    std::map<SuperPartition, std::uint64_t> out;
    for (auto& [n, rem] : by_degree) {
        auto t = modular_table(*block_gram(n, f.m), q0, t0, p);
        if (!t) return std::nullopt;
        std::map<SuperPartition, std::size_t> pos;
        for (std::size_t i = 0; i < t->order.size(); ++i) pos.emplace(t->order[i], i);
        auto lookup = [&](const SuperPartition& L) {
            std::map<SuperPartition, std::uint64_t> row;
            const std::size_t i = pos.at(L);
            for (std::size_t l = i; l < t->order.size(); ++l)
                if (t->c[i][l]) row.emplace(t->order[l], t->c[i][l]);
            return row;
        };
        for (const auto& [L, c] : solve_triangular(std::move(rem), t->order, lookup, ModOps{p})) out.emplace(L, c);
    }
    return out;
}

std::string table_to_json(const MacdonaldTable& t) {
    nlohmann::json j;
    j["format"] = kTableFormatVersion;
    j["n"] = t.n;
    j["m"] = t.m;
    j["entries"] = nlohmann::json::array();
    for (const auto& L : t.index)
        j["entries"].push_back({{"sp", L.str()},
                                {"P", nlohmann::json::parse(to_json(t.P.at(L)))},
                                {"norm2", t.norm2.at(L).str()}});
    return j.dump();
}

MacdonaldTable table_from_json(const std::string& text) {
    try {
        const auto j = nlohmann::json::parse(text);
        if (j.at("format").get<int>() != kTableFormatVersion) throw MacdonaldError("table format version mismatch");
        MacdonaldTable t;
        t.n = j.at("n").get<int>();
        t.m = j.at("m").get<int>();
        for (const auto& e : j.at("entries")) {
            const SuperPartition L = parse_superpartition(e.at("sp").get<std::string>());
            t.index.push_back(L);
            t.P.emplace(L, symfun_from_json(e.at("P").dump()));
            t.norm2.emplace(L, parse_ratfun(e.at("norm2").get<std::string>()));
        }
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw MacdonaldError(std::string("malformed table JSON: ") + e.what());
    }
}

}  // namespace supermac
