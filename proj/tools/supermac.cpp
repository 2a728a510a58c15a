// supermac: compute Macdonald superpolynomials, their norms and evaluations,
// and run the verification sweeps.  Data goes to stdout as JSON lines (keys
// sorted); a human-readable table goes to stderr.
//
// Exit status: 0 success, 1 a verification failed, 2 usage error.

#include "supermac/eval.hpp"
#include "supermac/hecke.hpp"
#include "supermac/macdonald.hpp"
#include "supermac/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace supermac;
using json = nlohmann::json;

constexpr int kExitOk = 0, kExitFailed = 1, kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const json& j) { std::cout << j.dump() << '\n'; }

/// Canonical form with a unit denominator dropped: "t^2" rather than "(t^2)/(1)".
std::string shown(const RatFun& r) { return r.is_polynomial() ? r.num().str() : r.str(); }
std::string shown(const UPoly& p) { return p.degree() <= 0 ? shown(p.coeff(0)) : p.str(); }

/// Left-aligned columns on stderr.
class Table {
public:
    explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
    void print() const {
        std::vector<std::size_t> w(rows_[0].size(), 0);
        for (const auto& r : rows_)
            for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
        for (const auto& r : rows_) {
            for (std::size_t i = 0; i < r.size(); ++i) {
                std::cerr << r[i];
                if (i + 1 < r.size()) std::cerr << std::string(w[i] - r[i].size() + 2, ' ');
            }
            std::cerr << '\n';
        }
    }

private:
    std::vector<std::vector<std::string>> rows_;
};

SuperPartition parse_sp(const std::string& text) {
    try {
        return parse_superpartition(text);
    } catch (const ShapeError& e) {
        throw UsageError(std::string("--sp \"") + text + "\": " + e.what());
    }
}

// ---------------------------------------------------------------------------

int cmd_list(int n, int m) {
    Table table({"#", "superpartition", "star", "circ"});
    int k = 0;
    for (const auto& L : enumerate(n, m)) {
        emit({{"index", k}, {"sp", L.str()}, {"n", n}, {"m", m},
              {"star", composition_str(L.star())}, {"circ", composition_str(L.circ())}});
        table.add({std::to_string(k++), L.str(), composition_str(L.star()), composition_str(L.circ())});
    }
    table.print();
    return kExitOk;
}

int cmd_expand(const SuperPartition& L, const std::string& basis_flag) {
    const Basis b = parse_basis(basis_flag);
    const SymFun P = macdonald_P(L, b);
    json terms = json::array();
    Table table({"term", "coefficient"});
    // Most dominant first, matching enumerate.
    for (const auto& O : enumerate(L.n(), L.m())) {
        auto it = P.coeffs.find(O);
        if (it == P.coeffs.end()) continue;
        terms.push_back({{"sp", O.str()}, {"coeff", shown(it->second)}});
        table.add({basis_flag + "_(" + O.str() + ")", shown(it->second)});
    }
    emit({{"sp", L.str()}, {"basis", basis_flag}, {"terms", terms}});
    table.print();
    return kExitOk;
}

/// Exact Gram–Schmidt up to this degree; beyond it the comparison is made
/// modulo 2^31−1 at two fixed points.
constexpr int kExactNormMaxDegree = 6;
constexpr std::pair<std::uint64_t, std::uint64_t> kNormPoints[] = {{12345, 67891}, {271828, 314159}};

int cmd_norm(const SuperPartition& L) {
    const RatFun formula = norm_formula(L);
    json out{{"sp", L.str()}, {"formula", shown(formula)}};
    Table table({"quantity", "value"});
    table.add({"formula", shown(formula)});
    bool agree = false, negated = false;
    if (L.n() <= kExactNormMaxDegree) {
        const RatFun gs = norm_squared(L);
        agree = gs == formula;
        negated = gs == -formula;
        out["method"] = "exact";
        out["gram_schmidt"] = shown(gs);
        table.add({"gram_schmidt", shown(gs)});
    } else {
        const std::uint64_t p = modp::kFieldPrime;
        json points = json::array();
        agree = negated = true;
        for (const auto& [q0, t0] : kNormPoints) {
            const auto gs = norm_squared_mod(L, q0, t0, p);
            const auto f = formula.eval_mod(q0, t0, p);
            if (!gs || !f) throw std::runtime_error("a denominator vanishes at the chosen point");
            agree = agree && *gs == *f;
            negated = negated && *gs == modp::neg(*f, p);
            points.push_back({{"q", q0}, {"t", t0}, {"formula", *f}, {"gram_schmidt", *gs}});
            table.add({"gram_schmidt mod p at (" + std::to_string(q0) + "," + std::to_string(t0) + ")",
                       std::to_string(*gs) + " (formula " + std::to_string(*f) + ")"});
        }
        out["method"] = "mod_p";
        out["prime"] = p;
        out["gram_schmidt"] = points;
    }
    out["agree"] = agree;
    // The scalar product carries (−1)^{C(m,2)}; report the relation that holds.
    out["relation"] = agree ? "gram_schmidt = formula" : negated ? "gram_schmidt = -formula" : "none";
    table.add({"AGREE", agree ? "true" : "false"});
    if (!agree) table.add({"relation", out["relation"].get<std::string>()});
    emit(out);
    table.print();
    return agree ? kExitOk : kExitFailed;
}

int cmd_eval(const SuperPartition& L, bool tilde, const std::optional<std::string>& u_text) {
    if (tilde && L.m() == 0) throw UsageError("eval2 needs a superpartition with at least one fermionic part");
    std::optional<RatFun> u0;
    if (u_text) {
        try {
            u0 = parse_ratfun(*u_text);
        } catch (const std::exception& e) {
            throw UsageError("--u \"" + *u_text + "\": " + e.what());
        }
    }
    const PhiFormula formula = phi_formula(L, tilde);
    const UPoly value = tilde ? phi_tilde(L) : phi(L);
    const bool agree = value == formula.value();
    json out{{"sp", L.str()}, {"evaluation", tilde ? "second" : "first"}, {"agree", agree},
             {"factored", formula.factored()}};
    Table table({"quantity", "value"});
    table.add({tilde ? "Phi~ (closed form)" : "Phi (closed form)", formula.factored()});
    if (u0) {
        const RatFun v = upoly_eval(value, *u0);
        out["u"] = shown(*u0);
        out["value"] = shown(v);
        table.add({"value at u = " + shown(*u0), shown(v)});
    } else {
        out["value"] = shown(value);
        table.add({"value", shown(value)});
    }
    const EvalStats st = eval_stats(L, tilde);
    out["stats"] = {{"n_S", st.n_S}, {"n_conj_a", st.n_conj_a}, {"size_a", st.size_a}, {"n_a", st.n_a}};
    table.add({"AGREE", agree ? "true" : "false"});
    emit(out);
    table.print();
    return agree ? kExitOk : kExitFailed;
}

int cmd_nonsym(const std::string& text) {
    Composition eta;
    try {
        eta = parse_composition(text);
    } catch (const HeckeError& e) {
        throw UsageError(std::string("--comp \"") + text + "\": " + e.what());
    }
    if (eta.empty()) throw UsageError("--comp needs at least one entry");
    const XPoly E = nonsym_macdonald(eta);
    json out = json::parse(to_json(E));
    out["eta"] = composition_str(eta);
    emit(out);
    Table table({"monomial", "coefficient"});
    for (auto it = E.terms().rbegin(); it != E.terms().rend(); ++it)
        table.add({"x^(" + composition_str(it->first) + ")", shown(it->second)});
    table.print();
    return kExitOk;
}

int cmd_verify(const std::string& suite, int max_deg, int jobs) {
    const auto results = verify::run_suite(suite, max_deg, jobs);
    Table table({"check", "subject", "result", "detail"});
    int passed = 0;
    for (const auto& r : results) {
        emit({{"suite", r.suite}, {"check", r.check}, {"subject", r.subject}, {"pass", r.pass}, {"detail", r.detail}});
        table.add({r.check, r.subject, r.pass ? "PASS" : "FAIL", r.detail});
        passed += r.pass ? 1 : 0;
    }
    const int failed = static_cast<int>(results.size()) - passed;
    emit({{"suite", suite}, {"max_deg", max_deg}, {"summary", true}, {"passed", passed}, {"failed", failed}});
    table.print();
    std::cerr << suite << ": " << passed << " passed, " << failed << " failed\n";
    return failed == 0 ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Macdonald superpolynomials: expansions, norms, evaluations and verification sweeps"};
    app.require_subcommand(1);
    int jobs = 0;
    app.add_option("--jobs", jobs, "worker threads for verify (0 = all cores)")->check(CLI::NonNegativeNumber);

    std::string sp_text, basis = "m", comp_text, suite, u_text;
    int n = 0, m = 0, max_deg = 4;
    bool formal = false;

    auto* list = app.add_subcommand("list", "enumerate superpartitions of bidegree (n|m)");
    list->add_option("--n", n, "total degree")->required()->check(CLI::NonNegativeNumber);
    list->add_option("--m", m, "fermionic degree")->required()->check(CLI::NonNegativeNumber);

    auto* expand_cmd = app.add_subcommand("expand", "expansion of P_Λ in a classical basis");
    expand_cmd->add_option("--sp", sp_text, "superpartition \"a1,...;s1,...\"")->required();
    expand_cmd->add_option("--basis", basis, "m, p or e")->check(CLI::IsMember({"m", "p", "e"}));

    auto* norm_cmd = app.add_subcommand("norm", "closed-form norm against Gram–Schmidt");
    norm_cmd->add_option("--sp", sp_text, "superpartition")->required();

    auto* eval_cmd = app.add_subcommand("eval", "first evaluation Φ_Λ(u)");
    auto* eval2_cmd = app.add_subcommand("eval2", "second evaluation Φ̃_Λ(u)");
    for (auto* c : {eval_cmd, eval2_cmd}) {
        c->add_option("--sp", sp_text, "superpartition")->required();
        auto* u = c->add_option("--u", u_text, "value of u, e.g. \"t^2\"");
        auto* f = c->add_flag("--formal", formal, "keep u formal (default)");
        u->excludes(f);
    }

    auto* nonsym = app.add_subcommand("nonsym", "non-symmetric Macdonald polynomial E_η");
    nonsym->add_option("--comp", comp_text, "composition \"5,2,0,1\"")->required();

    auto* verify_cmd = app.add_subcommand("verify", "run a verification sweep");
    verify_cmd->add_option("--suite", suite, "suite name")->required()->check(CLI::IsMember(verify::suite_names()));
    verify_cmd->add_option("--max-deg", max_deg, "largest |Λ| swept")->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--jobs", jobs, "worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*list) return cmd_list(n, m);
        if (*expand_cmd) return cmd_expand(parse_sp(sp_text), basis);
        if (*norm_cmd) return cmd_norm(parse_sp(sp_text));
        if (*eval_cmd || *eval2_cmd) {
            const std::optional<std::string> u = eval_cmd->count("--u") || eval2_cmd->count("--u") ? std::optional(u_text) : std::nullopt;
            return cmd_eval(parse_sp(sp_text), static_cast<bool>(*eval2_cmd), u);
        }
        if (*nonsym) return cmd_nonsym(comp_text);
        if (*verify_cmd) return cmd_verify(suite, max_deg, jobs);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailed;
    }
    return kExitUsage;
}
