// Bivariate gcd over Z by the modular method.
//
// Outer loop: images modulo word-size primes, combined by Chinese remaindering
// and certified by exact trial division over Z.  Inner loop (one prime):
// evaluate t at points, take univariate gcds in q, Newton-interpolate in t.
// Unlucky primes and points reveal themselves by a too-large degree and are
// discarded.

#include "supermac/coeff.hpp"
#include "supermac/modp.hpp"

#include <algorithm>

namespace supermac {

namespace {

using U = std::vector<std::uint64_t>;  // univariate mod p, index = degree
using B = std::vector<U>;              // bivariate: B[i] = coefficient of q^i as poly in t

void trim(U& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
void trim(B& a) {
    for (auto& c : a) trim(c);
    while (!a.empty() && a.back().empty()) a.pop_back();
}

std::uint64_t ueval(const U& a, std::uint64_t x, std::uint64_t p) {
    std::uint64_t r = 0;
    for (std::size_t i = a.size(); i-- > 0;) r = modp::add(modp::mul(r, x, p), a[i], p);
    return r;
}

void make_monic(U& a, std::uint64_t p) {
    if (a.empty() || a.back() == 1) return;
    const std::uint64_t li = modp::inv(a.back(), p);
    for (auto& c : a) c = modp::mul(c, li, p);
}

/// a mod b in place; b nonzero.
void urem(U& a, const U& b, std::uint64_t p) {
    const std::size_t db = b.size() - 1;
    const std::uint64_t li = modp::inv(b.back(), p);
    while (a.size() >= b.size()) {
        const std::uint64_t f = modp::mul(a.back(), li, p);
        const std::size_t s = a.size() - b.size();
        if (f != 0)
            for (std::size_t i = 0; i <= db; ++i) a[s + i] = modp::sub(a[s + i], modp::mul(f, b[i], p), p);
        a.pop_back();
        trim(a);
    }
}

/// Exact quotient a / b (b divides a).
U udiv(U a, const U& b, std::uint64_t p) {
    if (a.empty()) return {};
    const std::uint64_t li = modp::inv(b.back(), p);
    U q(a.size() - b.size() + 1, 0);
    while (a.size() >= b.size() && !a.empty()) {
        const std::uint64_t f = modp::mul(a.back(), li, p);
        const std::size_t s = a.size() - b.size();
        q[s] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[s + i] = modp::sub(a[s + i], modp::mul(f, b[i], p), p);
        a.pop_back();
    }
    trim(q);
    return q;
}

U ugcd(U a, U b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        urem(a, b, p);
        std::swap(a, b);
    }
    make_monic(a, p);
    return a;
}

U umul(const U& a, const U& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    U r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = modp::add(r[i + j], modp::mul(a[i], b[j], p), p);
    return r;
}

B to_modp(const QTPoly& a, std::uint64_t p) {
    B r(a.deg_q() + 1);
    for (const auto& tm : a.terms()) {
        U& c = r[tm.eq];
        if (c.size() <= tm.et) c.resize(tm.et + 1, 0);
        c[tm.et] = modp::reduce(tm.c, p);
    }
    trim(r);
    return r;
}

U content_t(const B& a, std::uint64_t p) {
    U g;
    for (const auto& c : a) {
        if (c.empty()) continue;
        g = g.empty() ? c : ugcd(g, c, p);
        if (g.size() == 1) break;
    }
    make_monic(g, p);
    return g;
}

std::size_t tdeg(const B& a) {
    std::size_t d = 0;
    for (const auto& c : a)
        if (!c.empty()) d = std::max(d, c.size() - 1);
    return d;
}

/// gcd in F_p[q,t] of nonzero a, b, normalized so the lex-leading coefficient
/// (top q power, top t power) is 1.
B pgcd(const B& a, const B& b, std::uint64_t p) {
    const U ca = content_t(a, p), cb = content_t(b, p);
    B ap = a, bp = b;
    for (auto& c : ap)
        if (!c.empty()) c = udiv(c, ca, p);
    for (auto& c : bp)
        if (!c.empty()) c = udiv(c, cb, p);
    const U cg = ugcd(ca, cb, p);
    if (ap.size() == 1 || bp.size() == 1) return B{cg};

    const U& la = ap.back();
    const U& lb = bp.back();
    const U gam = ugcd(la, lb, p);
    const std::size_t bound = std::min(tdeg(ap), tdeg(bp)) + (gam.size() - 1);

    std::size_t best = std::min(ap.size(), bp.size());  // one more than any possible q-degree
    B h;
    U prod{1};
    std::size_t npts = 0;
    for (std::uint64_t k = 0;; ++k) {
        const std::uint64_t x = 1 + (k * 2654435761ULL + 40503ULL) % (p - 1);
        const std::uint64_t gx = ueval(gam, x, p);
        if (gx == 0 || ueval(la, x, p) == 0 || ueval(lb, x, p) == 0) continue;
        U ua(ap.size()), ub(bp.size());
        for (std::size_t i = 0; i < ap.size(); ++i) ua[i] = ueval(ap[i], x, p);
        for (std::size_t i = 0; i < bp.size(); ++i) ub[i] = ueval(bp[i], x, p);
        U g = ugcd(std::move(ua), std::move(ub), p);
        const std::size_t dg = g.size() - 1;
        if (dg == 0) return B{cg};
        if (dg > best) continue;
        if (dg < best) {
            best = dg;
            h.assign(dg + 1, U{});
            prod = U{1};
            npts = 0;
        }
        for (auto& c : g) c = modp::mul(c, gx, p);
        const std::uint64_t pinv = modp::inv(ueval(prod, x, p), p);
        for (std::size_t i = 0; i <= dg; ++i) {
            const std::uint64_t diff = modp::sub(g[i], ueval(h[i], x, p), p);
            if (diff == 0) continue;
            const std::uint64_t f = modp::mul(diff, pinv, p);
            if (h[i].size() < prod.size()) h[i].resize(prod.size(), 0);
            for (std::size_t j = 0; j < prod.size(); ++j) h[i][j] = modp::add(h[i][j], modp::mul(f, prod[j], p), p);
        }
        prod = umul(prod, U{modp::neg(x, p), 1}, p);
        ++npts;
        if (npts > bound) break;
    }
    trim(h);
    const U ch = content_t(h, p);
    for (auto& c : h)
        if (!c.empty()) c = udiv(c, ch, p);
    for (auto& c : h) c = umul(c, cg, p);
    trim(h);
    const std::uint64_t li = modp::inv(h.back().back(), p);
    for (auto& c : h)
        for (auto& v : c) v = modp::mul(v, li, p);
    return h;
}

/// Lex-leading coefficient (top q power, then top t power).
const BigInt& lex_lead(const QTPoly& a) {
    const QTTerm* best = &a.terms().front();
    for (const auto& tm : a.terms())
        if (tm.eq > best->eq || (tm.eq == best->eq && tm.et > best->et)) best = &tm;
    return best->c;
}

QTPoly positive_lead(QTPoly a) {
    if (!a.is_zero() && a.lead().c < 0) a = -a;
    return a;
}

}  // namespace

QTPoly gcd(const QTPoly& a, const QTPoly& b) {
    if (a.is_zero()) return positive_lead(b);
    if (b.is_zero()) return positive_lead(a);
    const std::uint32_t mq = std::min(a.min_q(), b.min_q()), mt = std::min(a.min_t(), b.min_t());
    QTPoly A = a.unshifted(a.min_q(), a.min_t());
    QTPoly Bz = b.unshifted(b.min_q(), b.min_t());
    const BigInt ca = A.content(), cb = Bz.content();
    BigInt c;
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    const QTPoly mono = QTPoly::monomial(c, mq, mt);
    if (A.is_constant() || Bz.is_constant()) return mono;
    A = A.divided_exact(ca);
    Bz = Bz.divided_exact(cb);
    if (A == Bz || A == -Bz) return positive_lead(mono * A);
    if (A.size() <= Bz.size() && A.deg_q() <= Bz.deg_q() && A.deg_t() <= Bz.deg_t() && Bz.size() < 4 * A.size()) {
        if (Bz.divide(A)) return positive_lead(mono * A);
    } else if (Bz.size() <= A.size() && Bz.deg_q() <= A.deg_q() && Bz.deg_t() <= A.deg_t() && A.size() < 4 * Bz.size()) {
        if (A.divide(Bz)) return positive_lead(mono * Bz);
    }

    const BigInt& la = lex_lead(A);
    const BigInt& lb = lex_lead(Bz);
    BigInt gamma;
    mpz_gcd(gamma.get_mpz_t(), la.get_mpz_t(), lb.get_mpz_t());

    // Accumulated image: dense coefficients indexed [q][t], modulus M.
    std::vector<std::vector<BigInt>> acc;
    BigInt modulus = 0;
    std::pair<std::size_t, std::size_t> acc_deg{0, 0};
    QTPoly last;
    for (std::size_t k = 0;; ++k) {
        const std::uint64_t p = modp::prime(k);
        if (modp::reduce(la, p) == 0 || modp::reduce(lb, p) == 0) continue;
        B g = pgcd(to_modp(A, p), to_modp(Bz, p), p);
        if (g.size() == 1 && g[0].size() == 1) return mono;
        const std::uint64_t gp = modp::reduce(gamma, p);
        for (auto& cc : g)
            for (auto& v : cc) v = modp::mul(v, gp, p);
        const std::pair<std::size_t, std::size_t> deg{g.size() - 1, g.back().size() - 1};
        if (modulus != 0 && deg > acc_deg) continue;
        if (modulus == 0 || deg < acc_deg) {
            acc.assign(g.size(), {});
            for (std::size_t i = 0; i < g.size(); ++i) {
                acc[i].resize(g[i].size());
                for (std::size_t j = 0; j < g[i].size(); ++j) acc[i][j] = static_cast<unsigned long>(g[i][j]);
            }
            modulus = static_cast<unsigned long>(p);
            acc_deg = deg;
        } else {
            // CRT: x = acc + M * ((g - acc) * M^{-1} mod p).
            const std::uint64_t minv = modp::inv(modp::reduce(modulus, p), p);
            for (std::size_t i = 0; i < std::max(acc.size(), g.size()); ++i) {
                if (i >= acc.size()) acc.emplace_back();
                const std::size_t w = std::max(acc[i].size(), i < g.size() ? g[i].size() : 0);
                acc[i].resize(w);
                for (std::size_t j = 0; j < w; ++j) {
                    const std::uint64_t gv = (i < g.size() && j < g[i].size()) ? g[i][j] : 0;
                    const std::uint64_t av = modp::reduce(acc[i][j], p);
                    const std::uint64_t f = modp::mul(modp::sub(gv, av, p), minv, p);
                    if (f != 0) acc[i][j] += modulus * static_cast<unsigned long>(f);
                }
            }
            modulus *= static_cast<unsigned long>(p);
        }
        // Symmetric lift and certification.
        const BigInt half = modulus / 2;
        std::vector<QTTerm> terms;
        bool small = true;
        for (std::size_t i = 0; i < acc.size(); ++i)
            for (std::size_t j = 0; j < acc[i].size(); ++j) {
                if (acc[i][j] == 0) continue;
                BigInt v = acc[i][j] > half ? BigInt(acc[i][j] - modulus) : acc[i][j];
                if (mpz_sizeinbase(v.get_mpz_t(), 2) > 20) small = false;
                terms.push_back(QTTerm{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), std::move(v)});
            }
        QTPoly cand = QTPoly::from_terms(std::move(terms));
        if (small || cand == last) {
            QTPoly prim = cand.divided_exact(cand.content());
            if (A.divide(prim) && Bz.divide(prim)) return positive_lead(mono * prim);
        }
        last = std::move(cand);
    }
}

}  // namespace supermac
