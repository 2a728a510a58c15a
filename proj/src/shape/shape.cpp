#include "supermac/shape.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

namespace supermac {

int size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

Partition conjugate(const Partition& p) {
    Partition c(p.empty() ? 0 : p[0], 0);
    for (int r : p)
        for (int j = 0; j < r; ++j) ++c[j];
    return c;
}

bool dominates_leq(const Partition& mu, const Partition& lambda) {
    long sm = 0, sl = 0;
    for (std::size_t i = 0; i < std::max(mu.size(), lambda.size()); ++i) {
        sm += part(mu, i);
        sl += part(lambda, i);
        if (sm > sl) return false;
    }
    return true;
}

bool contains(const Partition& mu, const Partition& lambda) {
    if (mu.size() > lambda.size()) return false;
    for (std::size_t i = 0; i < mu.size(); ++i)
        if (mu[i] > lambda[i]) return false;
    return true;
}

std::vector<Cell> skew_cells(const Partition& lambda, const Partition& mu) {
    std::vector<Cell> out;
    for (std::size_t i = 0; i < lambda.size(); ++i)
        for (int j = part(mu, i); j < lambda[i]; ++j) out.push_back(Cell{int(i) + 1, j + 1});
    return out;
}

bool is_horizontal_strip(const Partition& lambda, const Partition& mu) {
    if (!contains(mu, lambda)) return false;
    for (std::size_t i = 0; i + 1 < lambda.size(); ++i)
        if (lambda[i + 1] > part(mu, i)) return false;
    return true;
}

bool is_vertical_strip(const Partition& lambda, const Partition& mu) {
    if (!contains(mu, lambda)) return false;
    for (std::size_t i = 0; i < lambda.size(); ++i)
        if (lambda[i] - part(mu, i) > 1) return false;
    return true;
}

Partition staircase(int k) {
    Partition d;
    for (int i = k - 1; i >= 1; --i) d.push_back(i);
    return d;
}

long n_stat(const Partition& p) {
    long s = 0;
    for (std::size_t i = 0; i < p.size(); ++i) s += long(i) * p[i];
    return s;
}

long n_stat(const std::vector<Cell>& cells) {
    long s = 0;
    for (const auto& c : cells) s += c.row - 1;
    return s;
}

std::pair<int, int> arm_leg(const Partition& lambda, Cell s) {
    if (s.row < 1 || s.col < 1 || s.row > int(lambda.size()) || s.col > lambda[s.row - 1])
        throw ShapeError("cell (" + std::to_string(s.row) + "," + std::to_string(s.col) + ") lies outside the diagram");
    const Partition c = conjugate(lambda);
    return {lambda[s.row - 1] - s.col, c[s.col - 1] - s.row};
}

// ---------------------------------------------------------------------------

SuperPartition::SuperPartition(std::vector<int> a, std::vector<int> s) : a_(std::move(a)), s_(std::move(s)) {
    while (!s_.empty() && s_.back() == 0) s_.pop_back();
    for (std::size_t i = 0; i < a_.size(); ++i) {
        if (a_[i] < 0) throw ShapeError("negative fermionic part");
        if (i > 0 && a_[i] >= a_[i - 1]) throw ShapeError("fermionic parts must be strictly decreasing");
    }
    for (std::size_t i = 0; i < s_.size(); ++i) {
        if (s_[i] <= 0) throw ShapeError("bosonic parts must be positive");
        if (i > 0 && s_[i] > s_[i - 1]) throw ShapeError("bosonic parts must be weakly decreasing");
    }
}

int SuperPartition::n() const {
    return std::accumulate(a_.begin(), a_.end(), 0) + std::accumulate(s_.begin(), s_.end(), 0);
}

Partition SuperPartition::star() const {
    Partition p;
    for (int x : a_)
        if (x > 0) p.push_back(x);
    p.insert(p.end(), s_.begin(), s_.end());
    std::sort(p.rbegin(), p.rend());
    return p;
}

Partition SuperPartition::circ() const {
    Partition p;
    for (int x : a_) p.push_back(x + 1);
    p.insert(p.end(), s_.begin(), s_.end());
    std::sort(p.rbegin(), p.rend());
    return p;
}

std::vector<int> SuperPartition::parts(int N) const {
    if (N < length()) throw ShapeError("too few variables for " + str());
    std::vector<int> v = a_;
    v.insert(v.end(), s_.begin(), s_.end());
    v.resize(N, 0);
    return v;
}

std::vector<int> SuperPartition::circled_rows() const {
    const Partition st = star(), ci = circ();
    std::vector<int> rows;
    for (std::size_t i = 0; i < ci.size(); ++i)
        if (ci[i] != part(st, i)) rows.push_back(int(i) + 1);
    return rows;
}

std::vector<int> SuperPartition::circled_columns() const {
    const Partition ci = circ();
    std::vector<int> cols;
    for (int r : circled_rows()) cols.push_back(ci[r - 1]);
    std::sort(cols.begin(), cols.end());
    return cols;
}

std::string SuperPartition::str() const {
    std::string out;
    for (std::size_t i = 0; i < a_.size(); ++i) out += (i ? "," : "") + std::to_string(a_[i]);
    out += ";";
    for (std::size_t i = 0; i < s_.size(); ++i) out += (i ? "," : "") + std::to_string(s_[i]);
    return out;
}

SuperPartition parse_superpartition(std::string_view text) {
    std::vector<int> sides[2];
    int side = 0;
    std::size_t i = 0;
    auto fail = [&](std::size_t at, const std::string& what) -> void {
        throw ShapeError("superpartition parse error at offset " + std::to_string(at) + ": " + what);
    };
    std::vector<std::size_t> offsets[2];
    bool expect_number = true;  // at the start of a side or after a comma
    bool side_empty = true;
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            if (!expect_number) fail(i, "expected ',' or ';'");
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i - start > 6) fail(start, "part too large");
            sides[side].push_back(std::stoi(std::string(text.substr(start, i - start))));
            offsets[side].push_back(start);
            expect_number = false;
            side_empty = false;
        } else if (c == ',') {
            if (expect_number) fail(i, "expected a part before ','");
            expect_number = true;
            ++i;
        } else if (c == ';') {
            if (side == 1) fail(i, "more than one ';'");
            if (expect_number && !side_empty) fail(i, "dangling ','");
            side = 1;
            expect_number = true;
            side_empty = true;
            ++i;
        } else {
            fail(i, std::string("unexpected character '") + c + "'");
        }
    }
    if (side == 0) fail(text.size(), "missing ';'");
    if (expect_number && !side_empty) fail(text.size(), "dangling ','");
    for (std::size_t k = 1; k < sides[0].size(); ++k)
        if (sides[0][k] >= sides[0][k - 1]) fail(offsets[0][k], "fermionic parts must be strictly decreasing");
    for (std::size_t k = 0; k < sides[1].size(); ++k) {
        if (sides[1][k] == 0 && k + 1 < sides[1].size() && sides[1][k + 1] != 0) fail(offsets[1][k], "zero inside bosonic parts");
        if (k > 0 && sides[1][k] > sides[1][k - 1]) fail(offsets[1][k], "bosonic parts must be weakly decreasing");
    }
    return SuperPartition(sides[0], sides[1]);
}

SuperPartition from_star_circledast(const Partition& star, const Partition& circ) {
    for (std::size_t i = 0; i < star.size(); ++i)
        if (part(circ, i) < star[i])
            throw ShapeError("star is not contained in circledast at row " + std::to_string(i + 1));
    std::vector<int> a, s;
    std::vector<int> cols;
    for (std::size_t i = 0; i < circ.size(); ++i) {
        const int d = circ[i] - part(star, i);
        if (d > 1) throw ShapeError("two added cells in row " + std::to_string(i + 1));
        if (d == 1) {
            if (std::find(cols.begin(), cols.end(), circ[i]) != cols.end())
                throw ShapeError("two added cells in column " + std::to_string(circ[i]));
            cols.push_back(circ[i]);
            a.push_back(part(star, i));
        } else if (circ[i] > 0) {
            s.push_back(circ[i]);
        }
    }
    std::sort(a.rbegin(), a.rend());
    return SuperPartition(a, s);
}

SuperPartition conjugate(const SuperPartition& L) { return from_star_circledast(conjugate(L.star()), conjugate(L.circ())); }

bool dominance_leq(const SuperPartition& O, const SuperPartition& L) {
    if (O.m() != L.m() || O.n() != L.n()) return false;
    return dominates_leq(O.star(), L.star()) && dominates_leq(O.circ(), L.circ());
}

bool contains(const SuperPartition& O, const SuperPartition& L) {
    return contains(O.star(), L.star()) && contains(O.circ(), L.circ());
}

bool is_strip(const SuperPartition& L, const SuperPartition& O, StripKind kind, bool tilde, int n) {
    const Partition ls = L.star(), lc = L.circ(), os = O.star(), oc = O.circ();
    if (!contains(os, ls) || !contains(oc, lc)) return false;
    if (size(ls) - size(os) != n) return false;
    if (size(lc) - size(oc) != n + (tilde ? 1 : 0)) return false;
    auto ok = kind == StripKind::horizontal ? is_horizontal_strip : is_vertical_strip;
    return ok(ls, os) && ok(lc, oc);
}

std::vector<Cell> cells_B(const SuperPartition& L) {
    const std::vector<int> rows = L.circled_rows(), cols = L.circled_columns();
    std::vector<Cell> out;
    for (const Cell& c : skew_cells(L.star(), {})) {
        const bool r = std::binary_search(rows.begin(), rows.end(), c.row);
        const bool k = std::binary_search(cols.begin(), cols.end(), c.col);
        if (!(r && k)) out.push_back(c);
    }
    return out;
}

std::vector<Cell> cells_S(const SuperPartition& L, bool tilde) {
    return tilde ? skew_cells(L.star(), staircase(L.m())) : skew_cells(L.circ(), staircase(L.m() + 1));
}

long zeta(const SuperPartition& L) {
    // A square is fermionic when it lies in a circled row and a circled
    // column (the complement of cells_B); every other square is bosonic.
    const std::vector<int> rows = L.circled_rows(), cols = L.circled_columns();
    auto fermionic = [&](const Cell& c) {
        return std::binary_search(rows.begin(), rows.end(), c.row) && std::binary_search(cols.begin(), cols.end(), c.col);
    };
    const Partition st = L.star();
    long z = 0;
    for (const Cell& c : skew_cells(st, {})) {
        if (!fermionic(c)) continue;
        for (int r = 1; r < c.row; ++r)
            if (!fermionic(Cell{r, c.col})) ++z;
    }
    return z;
}

SuperPartition remove_first_column(const SuperPartition& L) {
    if (!L.a().empty() && L.a().back() == 0)
        throw ShapeError("circle in the first column of " + L.str() + "; use remove_first_circle");
    std::vector<int> a = L.a(), s = L.s();
    for (int& x : a) --x;
    for (int& x : s) --x;
    return SuperPartition(a, s);
}

SuperPartition remove_first_circle(const SuperPartition& L) {
    if (L.a().empty() || L.a().back() != 0) throw ShapeError("no circle in the first column of " + L.str());
    std::vector<int> a = L.a();
    a.pop_back();
    return SuperPartition(a, L.s());
}

std::vector<int> fermionic_rows_after_tilde(const SuperPartition& L) { return remove_first_circle(L).circled_rows(); }

namespace {

void strict_parts(int n, int m, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (m == 0) {
        if (n == 0) out.push_back(cur);
        return;
    }
    // Need m distinct parts in [0, max_part]: the smallest possible sum is C(m,2).
    for (int k = std::min(n, max_part); k >= m - 1; --k) {
        if (n - k < binom2(m - 1)) continue;
        cur.push_back(k);
        strict_parts(n - k, m - 1, k - 1, cur, out);
        cur.pop_back();
    }
}

void plain_parts(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = std::min(n, max_part); k >= 1; --k) {
        cur.push_back(k);
        plain_parts(n - k, k, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<SuperPartition> enumerate(int n, int m) {
    std::vector<SuperPartition> out;
    if (n < 0 || m < 0) return out;
    for (int k = 0; k <= n; ++k) {
        std::vector<std::vector<int>> as, ss;
        std::vector<int> cur;
        strict_parts(k, m, k, cur, as);
        if (as.empty()) continue;
        plain_parts(n - k, n - k, cur, ss);
        for (const auto& a : as)
            for (const auto& s : ss) out.emplace_back(a, s);
    }
    std::vector<std::pair<std::pair<Partition, Partition>, SuperPartition>> keyed;
    keyed.reserve(out.size());
    for (auto& L : out) keyed.push_back({{L.star(), L.circ()}, L});
    std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
    out.clear();
    for (auto& k : keyed) out.push_back(std::move(k.second));
    return out;
}

long count_superpartitions(int n, int m) {
    // Coefficient of y^m z^n in prod_{k>=0} (1 + y z^k) * prod_{k>=1} 1/(1 - z^k).
    std::vector<std::vector<long>> f(m + 1, std::vector<long>(n + 1, 0));
    f[0][0] = 1;
    for (int k = 0; k <= n; ++k)
        for (int j = m; j >= 1; --j)
            for (int d = n; d >= k; --d) f[j][d] += f[j - 1][d - k];
    std::vector<long> p(n + 1, 0);
    p[0] = 1;
    for (int k = 1; k <= n; ++k)
        for (int d = k; d <= n; ++d) p[d] += p[d - k];
    long total = 0;
    for (int d = 0; d <= n; ++d) total += f[m][d] * p[n - d];
    return total;
}

long inversions(const std::vector<int>& e) {
    long c = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (e[i] < e[j]) ++c;
    return c;
}

RatFun t_factorial(int k) {
    QTPoly r(1);
    for (int j = 1; j <= k; ++j) {
        std::vector<QTTerm> terms;
        for (int i = 0; i < j; ++i) terms.push_back(QTTerm{0, std::uint32_t(i), BigInt(1)});
        r *= QTPoly::from_terms(std::move(terms));
    }
    return RatFun(r);
}

MiscStats misc_stats(const SuperPartition& L, int N) {
    MiscStats st;
    const int m = L.m();
    std::vector<int> s = L.s();
    if (N >= L.length()) s.resize(N - m, 0);
    RatFun f(1);
    for (std::size_t i = 0; i < s.size();) {
        std::size_t j = i;
        while (j < s.size() && s[j] == s[i]) ++j;
        f *= t_factorial(int(j - i));
        i = j;
    }
    st.f_s = f;
    st.inv_s = inversions(s);
    const Partition d = staircase(m);
    for (int i = 0; i < m; ++i) st.a_minus_delta.push_back(L.a()[i] - part(d, i));
    while (!st.a_minus_delta.empty() && st.a_minus_delta.back() == 0) st.a_minus_delta.pop_back();
    st.size_a_over_delta = std::accumulate(L.a().begin(), L.a().end(), 0L) - binom2(m);
    st.n_a_over_delta = n_stat(L.a()) - n_stat(d);
    const SuperPartition Lc = conjugate(L);
    st.n_conj_a_over_delta = n_stat(Lc.a()) - n_stat(d);
    return st;
}

}  // namespace supermac
