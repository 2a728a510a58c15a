#include "supermac/verify.hpp"

#include "supermac/eval.hpp"
#include "supermac/hecke.hpp"
#include "supermac/macdonald.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <random>
#include <stdexcept>
#include <thread>

namespace supermac::verify {

namespace {

struct Case {
    std::string check, subject;
    std::function<std::string()> run;  // returns "" on success, else why not
};

using Sweep = std::vector<Case>;

std::vector<CaseResult> run_cases(std::string_view suite, const Sweep& cases, int jobs) {
    std::vector<CaseResult> out(cases.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cases.size(); i = next++) {
            CaseResult& r = out[i];
            r.suite = suite;
            r.check = cases[i].check;
            r.subject = cases[i].subject;
            try {
                r.detail = cases[i].run();
                r.pass = r.detail.empty();
            } catch (const std::exception& e) {
                r.pass = false;
                r.detail = std::string("exception: ") + e.what();
            }
        }
    };
    if (jobs <= 0) jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    const int n_threads = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(jobs), cases.size()));
    if (n_threads <= 1) {
        worker();
        return out;
    }
    {
        std::vector<std::jthread> pool;
        for (int k = 0; k < n_threads; ++k) pool.emplace_back(worker);
    }  // joined here
    return out;
}

/// Superpartitions with |Λ| ≤ max_deg, every admissible m, in enumerate order.
std::vector<SuperPartition> all_up_to(int max_deg, int min_m = 0) {
    std::vector<SuperPartition> out;
    for (int n = 0; n <= max_deg; ++n)
        for (int m = min_m; binom2(m) <= n; ++m)
            for (auto& L : enumerate(n, m)) out.push_back(std::move(L));
    return out;
}

std::string fail_if(bool ok, const std::string& why) { return ok ? std::string() : why; }

// ---------------------------------------------------------------------------
// Symmetric suites

Sweep norms(int K) {
    Sweep s;
    for (const auto& L : all_up_to(K))
        s.push_back({"gram_schmidt_vs_formula", L.str(), [L] {
                         const RatFun gs = norm_squared(L), formula = norm_formula(L);
                         if (gs == formula) return std::string();
                         if (gs == -formula) return std::string("gram_schmidt = -formula (sign (-1)^C(m,2))");
                         return "gram_schmidt = " + gs.str() + ", formula = " + formula.str();
                     }});
    return s;
}

Sweep eval_first(int K) {
    Sweep s;
    for (const auto& L : all_up_to(K)) {
        s.push_back({"closed_form", L.str(), [L] {
                         const UPoly value = phi(L);
                         if (value != phi_formula(L, false).value()) return "computed " + value.str();
                         return fail_if(value == phi_formula_alt(L, false), "second closed form differs");
                     }});
        s.push_back({"routes", L.str(), [L] {
                         const SymFun P = macdonald_P(L);
                         const UPoly value = phi(L);
                         for (int N = std::max(L.m(), 1); N <= L.m() + 4; ++N)
                             if (eval_via_variables(P, N) != upoly_eval(value, RatFun::qt_power(0, N - L.m())))
                                 return "N = " + std::to_string(N);
                         return std::string();
                     }});
    }
    return s;
}

Sweep eval_second(int K) {
    Sweep s;
    for (const auto& L : all_up_to(K, 1))
        s.push_back({"closed_form", L.str(), [L] {
                         const UPoly value = phi_tilde(L);
                         if (value != phi_formula(L, true).value()) return "computed " + value.str();
                         return fail_if(value == phi_formula_alt(L, true), "second closed form differs");
                     }});
    return s;
}

Sweep duality(int K) {
    Sweep s;
    for (const auto& L : all_up_to(K))
        s.push_back({"omega_p_expansion", L.str(), [L] {
                         return fail_if(duality_check(L), "identity fails; C(m,2) = " + std::to_string(binom2(L.m())));
                     }});
    return s;
}

/// e_r P_Ω and ẽ_r P_Ω (r ≤ 3) in the P basis: vertical strips, and Ω, Γ ⊆ Λ
/// for every nonzero g^Λ_{ΩΓ} where P_Γ is the elementary factor.
Sweep pieri(int K) {
    Sweep s;
    for (const auto& O : all_up_to(K))
        for (int tilde = 0; tilde < 2; ++tilde)
            for (int r = tilde ? 0 : 1; r <= 3; ++r) {
                const SuperPartition G = tilde ? SuperPartition({r}, {}) : SuperPartition({}, {r});
                const std::string name = (tilde ? "e~" : "e") + std::to_string(r);
                s.push_back({name, O.str(), [O, G, r, tilde] {
                                 SymFun e{Basis::elementary, G.m(), {}};
                                 e.add(G, RatFun(1));
                                 const SymFun eP = to_macdonald(e);
                                 if (eP.coeffs.size() != 1) return std::string("elementary factor is not a single P");
                                 const SuperPartition Gp = eP.coeffs.begin()->first;
                                 const SymFun prod = to_macdonald(multiply_p(e, macdonald_P(O, Basis::powersum)));
                                 for (const auto& [L, c] : prod.coeffs) {
                                     if (!is_strip(L, O, StripKind::vertical, tilde != 0, r)) return "off-strip term " + L.str();
                                     if (!contains(O, L) || !contains(Gp, L)) return "containment fails at " + L.str();
                                 }
                                 return std::string();
                             }});
            }
    return s;
}

Sweep recursions(int K) {
    Sweep s;
    for (const auto& L : all_up_to(K)) {
        if (L.length() == 0) continue;
        s.push_back({"first_column", L.str(), [L] {
                         const int l = L.length();
                         const SuperPolyN P = expand(macdonald_P(L), l);
                         if (L.a().empty() || L.a().back() != 0) {
                             const SuperPolyN xs = SuperPolyN::term(l, 0, std::vector<std::uint8_t>(static_cast<std::size_t>(l), 1), RatFun(1));
                             return fail_if(P == xs * expand(macdonald_P(remove_first_column(L)), l), "column identity fails");
                         }
                         const RatFun sign(L.m() % 2 ? 1 : -1);  // (−1)^{m−1}
                         return fail_if(restrict(theta_derivative(P, l), l).scaled(sign) ==
                                            expand(macdonald_P(remove_first_circle(L)), l - 1),
                                        "circle identity fails");
                     }});
    }
    return s;
}

Sweep zeta_sweep(int K) {
    Sweep s;
    for (const auto& L : all_up_to(K))
        s.push_back({"zeta_vs_n_conj_a", L.str(), [L] {
                         const long z = zeta(L), n = misc_stats(L, std::max(L.length(), 1)).n_conj_a_over_delta;
                         return fail_if(z == n, "zeta = " + std::to_string(z) + ", n = " + std::to_string(n));
                     }});
    return s;
}

// ---------------------------------------------------------------------------
// Hecke suite

XPoly random_xpoly(std::mt19937& rng, int N) {
    std::uniform_int_distribution<int> coef(-3, 3), expo(0, 2);
    XPoly f(N);
    for (int term = 0; term < 4; ++term) {
        std::vector<int> e(static_cast<std::size_t>(N));
        for (auto& v : e) v = expo(rng);
        f.add_term(e, RatFun(coef(rng)));
    }
    return f;
}

/// Applies ops right to left, like a written operator word.
XPoly word(std::initializer_list<HeckeOp> ops, const XPoly& f) {
    const auto R = exact_ring(f.n_vars());
    XPoly g = f;
    for (auto it = std::rbegin(ops); it != std::rend(ops); ++it) g = apply(*it, g, R);
    return g;
}

HeckeOp T(int i, int N) { return i % N == 0 ? HeckeOp::T0() : HeckeOp::T(i % N); }

using Relation = std::function<bool(int N, const XPoly& f)>;

bool quadratic(int N, const XPoly& f) {
    const RatFun t = exact_ring(N).t;
    for (int i = 0; i < N; ++i) {
        const XPoly Tf = word({T(i, N)}, f);
        if (word({T(i, N)}, Tf) != Tf.scaled(t - RatFun(1)) + f.scaled(t)) return false;
        const int j = i == 0 ? N - 1 : i;
        if (word({HeckeOp::Tinv(j), HeckeOp::T(j)}, f) != f) return false;
    }
    return true;
}

bool braid(int N, const XPoly& f) {
    if (N < 3) return true;
    for (int i = 0; i < N; ++i) {
        if (word({T(i, N), T(i + 1, N), T(i, N)}, f) != word({T(i + 1, N), T(i, N), T(i + 1, N)}, f)) return false;
        for (int k = i + 2; k < i + N - 1; ++k)
            if (word({T(i, N), T(k, N)}, f) != word({T(k, N), T(i, N)}, f)) return false;
    }
    return true;
}

bool omega_intertwines(int N, const XPoly& f) {
    for (int i = 2; i <= N - 1; ++i)
        if (word({HeckeOp::omega(), HeckeOp::T(i)}, f) != word({HeckeOp::T(i - 1), HeckeOp::omega()}, f)) return false;
    return true;
}

bool y_commute(int N, const XPoly& f) {
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j)
            if (word({HeckeOp::Y(i), HeckeOp::Y(j)}, f) != word({HeckeOp::Y(j), HeckeOp::Y(i)}, f)) return false;
    return true;
}

bool exchange(int N, const XPoly& f) {
    const RatFun tm1 = exact_ring(N).t - RatFun(1);
    for (int i = 1; i < N; ++i) {
        const XPoly Yi = word({HeckeOp::Y(i)}, f);
        if (word({HeckeOp::T(i), HeckeOp::Y(i)}, f) != word({HeckeOp::Y(i + 1), HeckeOp::T(i)}, f) + Yi.scaled(tm1)) return false;
        if (word({HeckeOp::T(i), HeckeOp::Y(i + 1)}, f) != word({HeckeOp::Y(i), HeckeOp::T(i)}, f) - Yi.scaled(tm1)) return false;
        for (int j = 1; j <= N; ++j)
            if (j != i && j != i + 1 && word({HeckeOp::T(i), HeckeOp::Y(j)}, f) != word({HeckeOp::Y(j), HeckeOp::T(i)}, f))
                return false;
    }
    return true;
}

/// T_i U± = U± T_i = (t or −1) U±.
bool symmetrizer_absorbs(int N, const XPoly& f) {
    const RatFun t = exact_ring(N).t;
    const XPoly up = word({HeckeOp::Uplus(1, N)}, f), um = word({HeckeOp::Uminus(1, N)}, f);
    for (int i = 1; i < N; ++i) {
        if (word({HeckeOp::T(i)}, up) != up.scaled(t) || word({HeckeOp::T(i)}, um) != um.scaled(RatFun(-1))) return false;
    }
    return true;
}

bool symmetrizer_right(int N, const XPoly& f) {
    const RatFun t = exact_ring(N).t;
    const XPoly up = word({HeckeOp::Uplus(1, N)}, f), um = word({HeckeOp::Uminus(1, N)}, f);
    for (int i = 1; i < N; ++i)
        if (word({HeckeOp::Uplus(1, N), HeckeOp::T(i)}, f) != up.scaled(t) ||
            word({HeckeOp::Uminus(1, N), HeckeOp::T(i)}, f) != um.scaled(RatFun(-1)))
            return false;
    return true;
}

/// U⁻f = t^{−C(N,2)} (Δᵗ/Δ) A f.
bool antisymmetrizer_vs_a(int N, const XPoly& f) {
    const auto R = exact_ring(N);
    const XPoly Af = divide_delta(word({HeckeOp::A(1, N)}, f), 1, N, RatFun(1));
    return word({HeckeOp::Uminus(1, N)}, f) == (delta(N, 1, N, R.t) * Af).scaled(R.power(R.t, -N * (N - 1) / 2));
}

void add_relations(Sweep& s) {
    const std::vector<std::pair<std::string, Relation>> relations{
        {"quadratic", quadratic},         {"braid", braid},
        {"omega", omega_intertwines},     {"y_commute", y_commute},
        {"exchange", exchange},           {"tsym", symmetrizer_absorbs},
        {"urel", symmetrizer_right},      {"u_vs_a", antisymmetrizer_vs_a},
    };
    for (const auto& [name, rel] : relations)
        for (int N = 2; N <= 4; ++N)
            s.push_back({name, "N=" + std::to_string(N) + " probes=" + std::to_string(kProbesPerN), [rel, N] {
                             std::mt19937 rng(20241015u + static_cast<unsigned>(N));
                             for (int k = 0; k < kProbesPerN; ++k)
                                 if (!rel(N, random_xpoly(rng, N))) return "probe " + std::to_string(k);
                             return std::string();
                         }});
}

Sweep hecke(int K) {
    Sweep s;
    add_relations(s);
    const int d_eta = std::min(K, 3);
    for (int N = 1; N <= 3; ++N)
        for (int d = 0; d <= d_eta; ++d)
            for (const auto& eta : compositions(d, N))
                s.push_back({"e_eigen", composition_str(eta), [eta, N] {
                                 const XPoly E = nonsym_macdonald(eta);
                                 const auto R = exact_ring(N);
                                 if (E.coeff(eta) != RatFun(1)) return std::string("not monic");
                                 for (const auto& [nu, c] : E.terms())
                                     if (nu != eta && !bruhat_less(nu, eta)) return "term " + composition_str(nu) + " not below";
                                 for (int i = 1; i <= N; ++i)
                                     if (apply(HeckeOp::Y(i), E, R) != E.scaled(cherednik_eigenvalue(eta, i)))
                                         return "Y_" + std::to_string(i) + " eigenvalue";
                                 return std::string();
                             }});
    for (int N = 2; N <= 4; ++N)
        for (int d = 0; d <= std::min(d_eta, N == 4 ? 2 : 3); ++d)
            for (const auto& eta : compositions(d, N)) {
                s.push_back({"ti_action", composition_str(eta), [eta, N] {
                                 for (int i = 1; i < N; ++i)
                                     if (!check_Ti_action(eta, i)) return "T_" + std::to_string(i);
                                 return std::string();
                             }});
                s.push_back({"stability", composition_str(eta), [eta] { return fail_if(stability_check(eta), "restriction"); }});
            }
    for (const auto& L : all_up_to(K)) {
        s.push_back({"p_via_e", L.str(), [L] {
                         const SymFun P = macdonald_P(L);
                         for (int N = std::max(L.length(), 1); N <= 5; ++N)
                             if (symmetrize_to_P(L, N) != expand(P, N)) return "N = " + std::to_string(N);
                         return std::string();
                     }});
        s.push_back({"d1", L.str(), [L] {
                         const SymFun P = macdonald_P(L);
                         for (int N = std::max(L.length(), 1); N <= 4; ++N) {
                             const SuperPolyN f = expand(P, N);
                             if (d1_operator(f, D1Kind::star) != f.scaled(epsilon(L.star(), N))) return "D1* at N = " + std::to_string(N);
                             if (d1_operator(f, D1Kind::circledast) != f.scaled(epsilon(L.circ(), N)))
                                 return "D1 circledast at N = " + std::to_string(N);
                         }
                         return std::string();
                     }});
    }
    // Pieri supports of x_{i_1}⋯x_{i_p} E_η inside 𝕁_{N,p}.
    std::mt19937 rng(99);
    for (int k = 0; k < 30; ++k) {
        const int N = 2 + static_cast<int>(rng() % 3);
        const int size = static_cast<int>(rng() % (static_cast<unsigned>(std::min(K, 4)) + 1));
        const auto all = compositions(size, N);
        const Composition eta = all[rng() % all.size()];
        std::vector<int> idx;
        for (int i = 1; i <= N; ++i)
            if (rng() % 2) idx.push_back(i);
        if (idx.empty()) idx.push_back(1);
        std::string subject = composition_str(eta) + " idx=";
        for (std::size_t i = 0; i < idx.size(); ++i) subject += (i ? "," : "") + std::to_string(idx[i]);
        s.push_back({"pieri_in_J", subject, [eta, idx] {
                         const auto bound = pieri_bound_set(eta, static_cast<int>(idx.size()));
                         for (const auto& mu : pieri_support_set(eta, idx))
                             if (!bound.contains(mu)) return "outside: " + composition_str(mu);
                         return std::string();
                     }});
    }
    return s;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"norms", "eval", "eval2", "duality", "pieri", "recursions", "hecke", "zeta"};
    return names;
}

std::vector<CaseResult> run_suite(std::string_view suite, int max_deg, int jobs) {
    if (max_deg < 0) throw std::invalid_argument("max-deg must be non-negative");
    Sweep cases;
    if (suite == "norms") cases = norms(max_deg);
    else if (suite == "eval") cases = eval_first(max_deg);
    else if (suite == "eval2") cases = eval_second(max_deg);
    else if (suite == "duality") cases = duality(max_deg);
    else if (suite == "pieri") cases = pieri(max_deg);
    else if (suite == "recursions") cases = recursions(max_deg);
    else if (suite == "hecke") cases = hecke(max_deg);
    else if (suite == "zeta") cases = zeta_sweep(max_deg);
    else throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
    return run_cases(suite, cases, jobs);
}

}  // namespace supermac::verify
