#include "supermac/eval.hpp"

#include "supermac/hecke.hpp"
#include "supermac/macdonald.hpp"

#include <algorithm>
#include <sstream>

namespace supermac {

std::vector<RatFun> eval_points(int m, int N) {
    std::vector<RatFun> v;
    for (int r = 1; r <= N; ++r) v.push_back(RatFun::qt_power(-std::max(m - r, 0), r - 1));
    return v;
}

RatFun schur_at(const Partition& lambda, const std::vector<RatFun>& points) {
    const int k = static_cast<int>(points.size());
    if (static_cast<int>(lambda.size()) > k) return RatFun(0);
    // det(x_i^{λ_j + k − j}) by elimination over Q(q,t), then the Vandermonde product.
    std::vector<std::vector<RatFun>> a(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) a[i].push_back(points[i].pow(part(lambda, static_cast<std::size_t>(j)) + k - 1 - j));
    RatFun det(1);
    for (int c = 0; c < k; ++c) {
        int piv = c;
        while (piv < k && a[piv][c].is_zero()) ++piv;
        if (piv == k) return RatFun(0);
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        const RatFun inv = a[c][c].inverse();
        for (int r = c + 1; r < k; ++r) {
            if (a[r][c].is_zero()) continue;
            const RatFun f = a[r][c] * inv;
            for (int j = c; j < k; ++j) a[r][j] -= f * a[c][j];
        }
    }
    RatFun vdm(1);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) vdm *= points[i] - points[j];
    return det / vdm;
}

namespace {

Partition minus_staircase(const std::vector<int>& a) {
    const int m = static_cast<int>(a.size());
    Partition out;
    for (int i = 0; i < m; ++i)
        if (a[i] - (m - 1 - i) > 0) out.push_back(a[i] - (m - 1 - i));
    return out;
}

SymFun in_powersums(const SymFun& f) { return f.basis == Basis::powersum ? f : convert(f, Basis::powersum); }

int total_degree(const SymFun& f) {
    if (f.coeffs.empty()) throw EvalError("evaluation of the zero function needs an explicit degree");
    const int n = f.coeffs.begin()->first.n();
    for (const auto& [L, c] : f.coeffs)
        if (L.n() != n) throw EvalError("evaluation requires a homogeneous function");
    return n;
}

}  // namespace

UPoly eval_powersum(const SuperPartition& L) {
    const int m = L.m();
    const auto pts = eval_points(m, m);
    UPoly out(schur_at(minus_staircase(L.a()), pts));
    for (int k : L.s()) {
        RatFun pk;
        for (const auto& v : pts) pk += v.pow(k);
        const RatFun w = RatFun::qt_power(0, static_cast<long>(m) * k) / one_minus_qt(0, k);
        std::vector<RatFun> c(static_cast<std::size_t>(k) + 1);
        c[0] = pk + w;
        c[static_cast<std::size_t>(k)] = -w;
        out *= UPoly(std::move(c));
    }
    return out;
}

UPoly evaluate(const SymFun& f) {
    UPoly out;
    for (const auto& [L, c] : in_powersums(f).coeffs) out += eval_powersum(L).scaled(c);
    return out;
}

RatFun eval_polynomial(const SuperPolyN& F, int m) {
    const int N = F.n_vars();
    if (N < m) throw EvalError("evaluation needs at least m variables");
    const ThetaWord lead = (ThetaWord{1} << m) - 1;
    XPoly G(N);
    for (const auto& [mono, c] : F.terms())
        if (mono.theta == lead) G.add_term(std::vector<int>(mono.x.begin(), mono.x.end()), c);
    XPoly H(N);
    try {
        H = divide_delta(G, 1, m, RatFun(1));
    } catch (const HeckeError&) {
        throw EvalError("the θ_1⋯θ_m coefficient is not divisible by the Vandermonde");
    }
    const auto pts = eval_points(m, N);
    RatFun out;
    for (const auto& [e, c] : H.terms()) {
        RatFun term = c;
        for (int r = 0; r < N; ++r)
            if (e[r]) term *= pts[r].pow(e[r]);
        out += term;
    }
    return out;
}

RatFun eval_via_variables(const SymFun& f, int N) { return eval_polynomial(expand(f, N), f.m); }

UPoly evaluate_tilde(const SymFun& f) {
    if (f.m < 1) throw EvalError("the second evaluation needs fermionic degree at least 1");
    UPoly out;
    for (const auto& [L, c] : in_powersums(f).coeffs) {
        if (L.a().back() != 0) continue;
        const std::vector<int> a(L.a().begin(), L.a().end() - 1);
        out += eval_powersum(SuperPartition(a, L.s())).scaled(c);
    }
    return out;
}

RatFun eval_tilde_via_variables(const SymFun& f, int N) {
    if (f.m < 1) throw EvalError("the second evaluation needs fermionic degree at least 1");
    if (N < f.m) throw EvalError("evaluation needs at least m variables");
    // Derivatives act from the right, as in the θ_1⋯θ_m reading of 𝓔; the left
    // derivative differs by (−1)^{m−1} on θ-degree m.
    const SuperPolyN dF = theta_derivative(expand(f, N), N);
    return eval_polynomial(restrict(f.m % 2 ? dF : dF.scaled(RatFun(-1)), N), f.m - 1);
}

UPoly evaluate_tilde_interpolated(const SymFun& f) {
    if (f.m < 1) throw EvalError("the second evaluation needs fermionic degree at least 1");
    const int deg = total_degree(f) - static_cast<int>(binom2(f.m));
    std::vector<RatFun> xs, ys;
    for (int N = f.m; N <= f.m + deg + 1; ++N) {
        xs.push_back(RatFun::qt_power(0, N - f.m));
        ys.push_back(eval_tilde_via_variables(f, N));
    }
    // One point more than the degree needs; it must lie on the fitted polynomial.
    const RatFun x_check = xs.back(), y_check = ys.back();
    xs.pop_back();
    ys.pop_back();
    UPoly fit = interpolate(xs, ys);
    if (upoly_eval(fit, x_check) != y_check) throw EvalError("interpolation of the second evaluation is inconsistent");
    return fit;
}

// ---------------------------------------------------------------------------
// Closed forms

EvalStats eval_stats(const SuperPartition& L, bool tilde) {
    const int m = L.m();
    const int d = tilde ? m - 1 : m;  // δ_d
    const Partition delta = staircase(d);
    auto n_of = [](const std::vector<int>& v) {
        long s = 0;
        for (std::size_t i = 0; i < v.size(); ++i) s += static_cast<long>(i) * v[i];
        return s;
    };
    EvalStats st;
    st.n_S = tilde ? n_stat(L.star()) - n_stat(staircase(m)) : n_stat(L.circ()) - n_stat(staircase(m + 1));
    st.n_conj_a = n_of(conjugate(L).a()) - n_stat(delta);
    long asum = 0;
    for (int a : L.a()) asum += a;
    st.size_a = asum - size(delta);
    st.n_a = n_of(L.a()) - n_stat(delta);
    return st;
}

PhiFormula phi_formula(const SuperPartition& L, bool tilde) {
    const int m = L.m();
    if (tilde && m < 1) throw EvalError("the second evaluation needs fermionic degree at least 1");
    const EvalStats st = eval_stats(L, tilde);
    const long d = tilde ? m - 1 : m;
    PhiFormula out;
    out.prefactor = {-((d - 1) * st.size_a - st.n_a), st.n_S + st.n_conj_a};
    for (const Cell& c : cells_S(L, tilde)) out.roots.emplace_back(c.col - 1, tilde ? m - c.row : m - (c.row - 1));
    const Partition star = L.star(), circ = L.circ();
    for (const Cell& s : cells_B(L)) out.denominator.emplace_back(arm_leg(circ, s).first, arm_leg(star, s).second + 1);
    return out;
}

UPoly PhiFormula::value() const {
    RatFun c = RatFun::qt_power(prefactor.first, prefactor.second);
    for (const auto& [a, b] : denominator) c /= one_minus_qt(a, b);
    UPoly out(c);
    for (const auto& [a, b] : roots) out *= UPoly::one_minus(RatFun::qt_power(a, b));
    return out;
}

namespace {

/// "q^2*t", "t^-1", "1"; the sign of each exponent is kept.
std::string monomial_text(long a, long b) {
    std::string s;
    auto put = [&s](char v, long e) {
        if (e == 0) return;
        if (!s.empty()) s += '*';
        s += v;
        if (e != 1) s += '^' + std::to_string(e);
    };
    put('q', a);
    put('t', b);
    return s.empty() ? "1" : s;
}

std::string factor_text(long a, long b, bool with_u) {
    std::string mono = monomial_text(a, b);
    if (with_u) mono = mono == "1" ? "u" : mono + "*u";
    return "(1-" + mono + ")";
}

/// The factors in display order, equal ones merged into (…)^k.
std::string factor_product(std::vector<PhiFormula::Monomial> v, bool with_u, bool descending) {
    std::sort(v.begin(), v.end(), [descending](const auto& x, const auto& y) {
        // By t-exponent, then q-exponent: the order the factors are usually written in.
        const auto kx = std::pair(x.second, x.first), ky = std::pair(y.second, y.first);
        return descending ? ky < kx : kx < ky;
    });
    std::string out;
    for (std::size_t i = 0; i < v.size();) {
        std::size_t j = i;
        while (j < v.size() && v[j] == v[i]) ++j;
        if (!out.empty()) out += '*';
        out += factor_text(v[i].first, v[i].second, with_u);
        if (j - i > 1) out += '^' + std::to_string(j - i);
        i = j;
    }
    return out;
}

}  // namespace

std::string PhiFormula::factored() const {
    // Prefactor written as positive powers over positive powers: t^6/q^3.
    std::string up = monomial_text(std::max(prefactor.first, 0L), std::max(prefactor.second, 0L));
    std::string down = monomial_text(std::max(-prefactor.first, 0L), std::max(-prefactor.second, 0L));
    std::ostringstream os;
    os << up;
    if (down != "1") os << '/' << down;
    if (!roots.empty()) os << '*' << factor_product(roots, true, false);
    if (!denominator.empty()) os << "/(" << factor_product(denominator, false, true) << ')';
    return os.str();
}

UPoly phi_formula_alt(const SuperPartition& L, bool tilde) {
    const int m = L.m();
    if (tilde && m < 1) throw EvalError("the second evaluation needs fermionic degree at least 1");
    const EvalStats st = eval_stats(L, tilde);
    const long d = tilde ? m - 1 : m;
    RatFun c = RatFun::qt_power(-((d - 1) * st.size_a - st.n_a), st.n_conj_a);
    const Partition star = L.star(), circ = L.circ();
    for (const Cell& s : cells_B(L)) c /= one_minus_qt(arm_leg(circ, s).first, arm_leg(star, s).second + 1);
    UPoly out(c);
    for (const Cell& cell : cells_S(L, tilde)) {
        const RatFun lin = -RatFun::qt_power(cell.col - 1, tilde ? m - 1 : m);
        out *= UPoly(std::vector<RatFun>{RatFun::qt_power(0, cell.row - 1), lin});
    }
    return out;
}

UPoly phi(const SuperPartition& L) { return evaluate(macdonald_P(L, Basis::powersum)); }

UPoly phi_tilde(const SuperPartition& L) { return evaluate_tilde(macdonald_P(L, Basis::powersum)); }

RatFun norm_from_eval(const SuperPartition& L) {
    const int n = L.n();
    const RatFun num = phi(L).coeff(0);
    const RatFun den = substitute(phi(conjugate(L)).coeff(0), kDualMap);
    RatFun out = RatFun::qt_power(n, 0) * num / den;
    return (n + binom2(L.m())) % 2 ? -out : out;
}

}  // namespace supermac
