#include "supermac/coeff.hpp"
#include "supermac/modp.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace supermac {

namespace modp {

std::uint64_t prime(std::size_t k) {
    static const std::vector<std::uint64_t> table = [] {
        std::vector<std::uint64_t> out;
        auto is_prime = [](std::uint64_t n) {
            if (n % 2 == 0) return false;
            for (std::uint64_t d = 3; d * d <= n; d += 2)
                if (n % d == 0) return false;
            return true;
        };
        for (std::uint64_t n = (1ULL << 31) - 1; out.size() < 256; n -= 2)
            if (is_prime(n)) out.push_back(n);
        return out;
    }();
    if (k >= table.size()) throw CoeffError("modular prime table exhausted");
    return table[k];
}

template <>
std::uint64_t reduce<BigInt>(const BigInt& v, std::uint64_t p) {
    return mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p));
}

Fp Fp::inverse() const {
    if (v_ == 0) throw CoeffError("division by zero in F_p");
    return raw(inv(v_, kFieldPrime));
}

}  // namespace modp

namespace {

bool term_greater(const QTTerm& a, const QTTerm& b) { return grlex_greater(a.eq, a.et, b.eq, b.et); }

}  // namespace

QTPoly::QTPoly(long c) {
    if (c != 0) terms_.push_back(QTTerm{0, 0, BigInt(c)});
}

QTPoly::QTPoly(const BigInt& c) {
    if (c != 0) terms_.push_back(QTTerm{0, 0, c});
}

QTPoly QTPoly::monomial(const BigInt& c, std::uint32_t eq, std::uint32_t et) {
    QTPoly p;
    if (c != 0) p.terms_.push_back(QTTerm{eq, et, c});
    return p;
}

QTPoly QTPoly::from_terms(std::vector<QTTerm> terms) {
    std::sort(terms.begin(), terms.end(), term_greater);
    QTPoly p;
    for (auto& tm : terms) {
        if (!p.terms_.empty() && p.terms_.back().eq == tm.eq && p.terms_.back().et == tm.et) {
            p.terms_.back().c += tm.c;
        } else {
            if (!p.terms_.empty() && p.terms_.back().c == 0) p.terms_.pop_back();
            p.terms_.push_back(std::move(tm));
        }
    }
    if (!p.terms_.empty() && p.terms_.back().c == 0) p.terms_.pop_back();
    return p;
}

std::uint32_t QTPoly::deg_q() const {
    std::uint32_t d = 0;
    for (const auto& tm : terms_) d = std::max(d, tm.eq);
    return d;
}
std::uint32_t QTPoly::deg_t() const {
    std::uint32_t d = 0;
    for (const auto& tm : terms_) d = std::max(d, tm.et);
    return d;
}
std::uint32_t QTPoly::min_q() const {
    if (terms_.empty()) return 0;
    std::uint32_t d = terms_[0].eq;
    for (const auto& tm : terms_) d = std::min(d, tm.eq);
    return d;
}
std::uint32_t QTPoly::min_t() const {
    if (terms_.empty()) return 0;
    std::uint32_t d = terms_[0].et;
    for (const auto& tm : terms_) d = std::min(d, tm.et);
    return d;
}

BigInt QTPoly::content() const {
    BigInt g = 0;
    for (const auto& tm : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), tm.c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

QTPoly QTPoly::operator-() const {
    QTPoly r = *this;
    for (auto& tm : r.terms_) tm.c = -tm.c;
    return r;
}

namespace {

template <bool Subtract>
std::vector<QTTerm> merge_terms(const std::vector<QTTerm>& a, const std::vector<QTTerm>& b) {
    std::vector<QTTerm> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && term_greater(a[i], b[j]))) {
            out.push_back(a[i++]);
        } else if (i == a.size() || term_greater(b[j], a[i])) {
            out.push_back(b[j]);
            if constexpr (Subtract) out.back().c = -out.back().c;
            ++j;
        } else {
            BigInt c = Subtract ? BigInt(a[i].c - b[j].c) : BigInt(a[i].c + b[j].c);
            if (c != 0) out.push_back(QTTerm{a[i].eq, a[i].et, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

QTPoly& QTPoly::operator+=(const QTPoly& o) {
    if (o.terms_.empty()) return *this;
    terms_ = merge_terms<false>(terms_, o.terms_);
    return *this;
}

QTPoly& QTPoly::operator-=(const QTPoly& o) {
    if (o.terms_.empty()) return *this;
    terms_ = merge_terms<true>(terms_, o.terms_);
    return *this;
}

QTPoly operator*(const QTPoly& a, const QTPoly& b) {
    if (a.is_zero() || b.is_zero()) return QTPoly();
    if (a.is_monomial()) return b.shifted(a.terms_[0].eq, a.terms_[0].et).scaled(a.terms_[0].c);
    if (b.is_monomial()) return a.shifted(b.terms_[0].eq, b.terms_[0].et).scaled(b.terms_[0].c);
    // Dense accumulation over the bounding box of the product.
    const std::uint32_t q0 = a.min_q() + b.min_q(), t0 = a.min_t() + b.min_t();
    const std::uint32_t q1 = a.deg_q() + b.deg_q(), t1 = a.deg_t() + b.deg_t();
    const std::size_t w = t1 - t0 + 1;
    std::vector<BigInt> acc((q1 - q0 + 1) * w);
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) {
            std::size_t idx = (x.eq + y.eq - q0) * w + (x.et + y.et - t0);
            mpz_addmul(acc[idx].get_mpz_t(), x.c.get_mpz_t(), y.c.get_mpz_t());
        }
    QTPoly r;
    for (std::uint32_t d = q1 + t1 + 1; d-- > q0 + t0;) {
        for (std::uint32_t i = std::min(q1, d); i + 1 > q0 && d - i <= t1; --i) {
            if (d - i >= t0) {
                auto& c = acc[(i - q0) * w + (d - i - t0)];
                if (c != 0) r.terms_.push_back(QTTerm{i, d - i, std::move(c)});
            }
            if (i == 0) break;
        }
    }
    return r;
}

QTPoly& QTPoly::operator*=(const QTPoly& o) { return *this = *this * o; }

bool operator==(const QTPoly& a, const QTPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        const auto& x = a.terms_[i];
        const auto& y = b.terms_[i];
        if (x.eq != y.eq || x.et != y.et || x.c != y.c) return false;
    }
    return true;
}

QTPoly QTPoly::scaled(const BigInt& c) const {
    if (c == 0) return QTPoly();
    QTPoly r = *this;
    if (c != 1)
        for (auto& tm : r.terms_) tm.c *= c;
    return r;
}

QTPoly QTPoly::divided_exact(const BigInt& c) const {
    QTPoly r = *this;
    if (c != 1)
        for (auto& tm : r.terms_) mpz_divexact(tm.c.get_mpz_t(), tm.c.get_mpz_t(), c.get_mpz_t());
    return r;
}

QTPoly QTPoly::shifted(std::uint32_t dq, std::uint32_t dt) const {
    QTPoly r = *this;
    for (auto& tm : r.terms_) {
        tm.eq += dq;
        tm.et += dt;
    }
    return r;
}

QTPoly QTPoly::unshifted(std::uint32_t dq, std::uint32_t dt) const {
    QTPoly r = *this;
    for (auto& tm : r.terms_) {
        tm.eq -= dq;
        tm.et -= dt;
    }
    return r;
}

QTPoly QTPoly::pow(unsigned k) const {
    QTPoly r(1), b = *this;
    while (k) {
        if (k & 1) r *= b;
        k >>= 1;
        if (k) b *= b;
    }
    return r;
}

std::optional<QTPoly> QTPoly::divide(const QTPoly& d) const {
    if (d.is_zero()) throw CoeffError("polynomial division by zero");
    if (is_zero()) return QTPoly();
    const std::uint32_t dmq = d.min_q(), dmt = d.min_t();
    if (dmq > min_q() || dmt > min_t() || d.deg_q() > deg_q() || d.deg_t() > deg_t()) return std::nullopt;
    if (d.is_monomial()) {
        QTPoly r = unshifted(dmq, dmt);
        for (auto& tm : r.terms_) {
            if (!mpz_divisible_p(tm.c.get_mpz_t(), d.terms_[0].c.get_mpz_t())) return std::nullopt;
            mpz_divexact(tm.c.get_mpz_t(), tm.c.get_mpz_t(), d.terms_[0].c.get_mpz_t());
        }
        return r;
    }
    // Lex-order (q first) long division on a dense remainder; the caller's
    // monomial content of d is stripped from both sides first.
    const QTPoly a = unshifted(dmq, dmt);
    const QTPoly b = d.unshifted(dmq, dmt);
    const std::uint32_t qa = a.deg_q(), ta = a.deg_t();
    const std::size_t w = ta + 1;
    std::vector<BigInt> rem((qa + 1) * w);
    for (const auto& tm : a.terms_) rem[tm.eq * w + tm.et] = tm.c;
    std::uint32_t lq = b.deg_q(), lt = 0;
    const BigInt* lc = nullptr;
    for (const auto& tm : b.terms_)
        if (tm.eq == lq && (lc == nullptr || tm.et > lt)) {
            lt = tm.et;
            lc = &tm.c;
        }
    std::vector<QTTerm> quot;
    BigInt qc;
    for (std::uint32_t i = qa + 1; i-- > 0;) {
        for (std::uint32_t j = ta + 1; j-- > 0;) {
            BigInt& c = rem[i * w + j];
            if (c == 0) continue;
            if (i < lq || j < lt) return std::nullopt;
            if (!mpz_divisible_p(c.get_mpz_t(), lc->get_mpz_t())) return std::nullopt;
            mpz_divexact(qc.get_mpz_t(), c.get_mpz_t(), lc->get_mpz_t());
            const std::uint32_t si = i - lq, sj = j - lt;
            for (const auto& tm : b.terms_) {
                const std::uint32_t jj = sj + tm.et;
                if (jj > ta) return std::nullopt;
                BigInt& r = rem[(si + tm.eq) * w + jj];
                mpz_submul(r.get_mpz_t(), qc.get_mpz_t(), tm.c.get_mpz_t());
            }
            quot.push_back(QTTerm{si, sj, qc});
        }
    }
    return from_terms(std::move(quot));
}

std::uint64_t QTPoly::eval_mod(std::uint64_t q0, std::uint64_t t0, std::uint64_t p) const {
    std::uint64_t s = 0;
    for (const auto& tm : terms_) {
        std::uint64_t v = modp::mul(modp::pow(q0, tm.eq, p), modp::pow(t0, tm.et, p), p);
        s = modp::add(s, modp::mul(v, modp::reduce(tm.c, p), p), p);
    }
    return s;
}

BigRat QTPoly::eval(const BigRat& q0, const BigRat& t0) const {
    BigRat s = 0;
    for (const auto& tm : terms_) {
        BigRat v = tm.c;
        for (std::uint32_t i = 0; i < tm.eq; ++i) v *= q0;
        for (std::uint32_t i = 0; i < tm.et; ++i) v *= t0;
        s += v;
    }
    return s;
}

std::string QTPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& tm : terms_) {
        const bool neg = tm.c < 0;
        BigInt mag = abs(tm.c);
        if (neg)
            os << '-';
        else if (!first)
            os << '+';
        first = false;
        bool need_star = false;
        if (mag != 1 || (tm.eq == 0 && tm.et == 0)) {
            os << mag.get_str();
            need_star = true;
        }
        auto var = [&](char name, std::uint32_t e) {
            if (e == 0) return;
            if (need_star) os << '*';
            os << name;
            if (e > 1) os << '^' << e;
            need_star = true;
        };
        var('q', tm.eq);
        var('t', tm.et);
    }
    return os.str();
}

}  // namespace supermac
