#include "supermac/coeff.hpp"
#include "supermac/modp.hpp"

namespace supermac {

namespace {

/// Divides out gcd(num, den) and fixes the sign of den.  Inputs nonzero den.
void canonicalize(QTPoly& num, QTPoly& den) {
    if (num.is_zero()) {
        den = QTPoly(1);
        return;
    }
    if (!den.is_one()) {
        QTPoly g = gcd(num, den);
        if (!g.is_one()) {
            num = *num.divide(g);
            den = *den.divide(g);
        }
    }
    if (den.lead().c < 0) {
        num = -num;
        den = -den;
    }
}

}  // namespace

RatFun::RatFun(const BigRat& c) : num_(BigInt(c.get_num())), den_(BigInt(c.get_den())) {}

RatFun::RatFun(const QTPoly& num, const QTPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw CoeffError("rational function with zero denominator");
    canonicalize(num_, den_);
}

RatFun RatFun::qt_power(long a, long b) {
    QTPoly num = QTPoly::monomial(1, a > 0 ? a : 0, b > 0 ? b : 0);
    QTPoly den = QTPoly::monomial(1, a < 0 ? -a : 0, b < 0 ? -b : 0);
    return RatFun(std::move(num), std::move(den), Raw{});
}

RatFun one_minus_qt(long a, long b) {
    const long sa = a < 0 ? -a : 0, sb = b < 0 ? -b : 0;
    // 1 - q^a t^b = (q^sa t^sb - q^(a+sa) t^(b+sb)) / (q^sa t^sb)
    QTPoly num = QTPoly::monomial(1, sa, sb) - QTPoly::monomial(1, a + sa, b + sb);
    return RatFun(num, QTPoly::monomial(1, sa, sb));
}

RatFun RatFun::operator-() const { return RatFun(-num_, den_, Raw{}); }

RatFun operator+(const RatFun& a, const RatFun& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_.is_one() && b.den_.is_one()) return RatFun(a.num_ + b.num_, QTPoly(1), RatFun::Raw{});
    if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
    if (b.den_.is_one()) return RatFun(a.num_ + b.num_ * a.den_, a.den_, RatFun::Raw{});
    if (a.den_.is_one()) return RatFun(b.num_ + a.num_ * b.den_, b.den_, RatFun::Raw{});
    const QTPoly g = gcd(a.den_, b.den_);
    if (g.is_one()) {
        QTPoly den = a.den_ * b.den_;
        QTPoly num = a.num_ * b.den_ + b.num_ * a.den_;
        if (num.is_zero()) return RatFun();
        // Coprime denominators keep the sum reduced; only the sign needs care.
        if (den.lead().c < 0) {
            num = -num;
            den = -den;
        }
        return RatFun(std::move(num), std::move(den), RatFun::Raw{});
    }
    const QTPoly ad = *a.den_.divide(g), bd = *b.den_.divide(g);
    QTPoly num = a.num_ * bd + b.num_ * ad;
    if (num.is_zero()) return RatFun();
    QTPoly den = ad * bd;
    QTPoly h = gcd(num, g);
    if (!h.is_one()) {
        num = *num.divide(h);
        den *= *g.divide(h);
    } else {
        den *= g;
    }
    if (den.lead().c < 0) {
        num = -num;
        den = -den;
    }
    return RatFun(std::move(num), std::move(den), RatFun::Raw{});
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
    if (a.is_zero() || b.is_zero()) return RatFun();
    if (a.den_.is_one() && b.den_.is_one()) return RatFun(a.num_ * b.num_, QTPoly(1), RatFun::Raw{});
    // Cross-cancel: gcd(a.num, b.den) and gcd(b.num, a.den).
    QTPoly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
    if (!bd.is_one()) {
        QTPoly g = gcd(an, bd);
        if (!g.is_one()) {
            an = *an.divide(g);
            bd = *bd.divide(g);
        }
    }
    if (!ad.is_one()) {
        QTPoly g = gcd(bn, ad);
        if (!g.is_one()) {
            bn = *bn.divide(g);
            ad = *ad.divide(g);
        }
    }
    QTPoly num = an * bn, den = ad * bd;
    if (den.lead().c < 0) {
        num = -num;
        den = -den;
    }
    return RatFun(std::move(num), std::move(den), RatFun::Raw{});
}

RatFun RatFun::inverse() const {
    if (is_zero()) throw CoeffError("division by zero in Q(q,t)");
    QTPoly num = den_, den = num_;
    if (den.lead().c < 0) {
        num = -num;
        den = -den;
    }
    return RatFun(std::move(num), std::move(den), Raw{});
}

RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }

RatFun RatFun::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    return RatFun(num_.pow(static_cast<unsigned>(k)), den_.pow(static_cast<unsigned>(k)), Raw{});
}

BigRat RatFun::eval(const BigRat& q0, const BigRat& t0) const {
    BigRat d = den_.eval(q0, t0);
    if (d == 0) throw CoeffError("denominator vanishes at evaluation point");
    return num_.eval(q0, t0) / d;
}

std::optional<std::uint64_t> RatFun::eval_mod(std::uint64_t q0, std::uint64_t t0, std::uint64_t p) const {
    const std::uint64_t d = den_.eval_mod(q0, t0, p);
    if (d == 0) return std::nullopt;
    return modp::mul(num_.eval_mod(q0, t0, p), modp::inv(d, p), p);
}

void RatSum::add(const RatFun& r) {
    if (r.is_zero()) return;
    if (r.den() == den_) {
        num_ += r.num();
        return;
    }
    if (r.den().is_one()) {
        num_ += r.num() * den_;
        return;
    }
    const QTPoly g = gcd(den_, r.den());
    const QTPoly rd = *r.den().divide(g);  // r.den / g
    const QTPoly dd = *den_.divide(g);     // den_ / g
    num_ = num_ * rd + r.num() * dd;
    den_ *= rd;
}

void RatSum::add(const RatFun& r, const BigRat& w) {
    if (w == 0 || r.is_zero()) return;
    if (w == 1) return add(r);
    add(RatFun(r.num().scaled(w.get_num()), r.den().scaled(w.get_den())));
}

std::string RatFun::str() const { return "(" + num_.str() + ")/(" + den_.str() + ")"; }

namespace {

// Image of a polynomial under a Laurent monomial map, returned together with
// the monomial q^sq t^st it was multiplied by to stay polynomial.
struct LaurentImage {
    QTPoly poly;
    long sq = 0, st = 0;
};

LaurentImage laurent_image(const QTPoly& a, SubMap map) {
    std::vector<std::pair<long, long>> exps;
    std::vector<QTTerm> out;
    long mq = 0, mt = 0;
    for (const auto& tm : a.terms()) {
        long eq = 0, et = 0;
        auto place = [&](Sub target, long e) {
            switch (target) {
                case Sub::q: eq += e; break;
                case Sub::t: et += e; break;
                case Sub::inv_q: eq -= e; break;
                case Sub::inv_t: et -= e; break;
            }
        };
        place(map.q_to, tm.eq);
        place(map.t_to, tm.et);
        exps.emplace_back(eq, et);
        mq = std::min(mq, eq);
        mt = std::min(mt, et);
    }
    for (std::size_t i = 0; i < exps.size(); ++i)
        out.push_back(QTTerm{static_cast<std::uint32_t>(exps[i].first - mq), static_cast<std::uint32_t>(exps[i].second - mt),
                             a.terms()[i].c});
    return LaurentImage{QTPoly::from_terms(std::move(out)), -mq, -mt};
}

}  // namespace

RatFun substitute(const RatFun& a, SubMap map) {
    if (a.is_zero()) return a;
    LaurentImage n = laurent_image(a.num(), map), d = laurent_image(a.den(), map);
    // value = (n.poly / q^n.sq t^n.st) / (d.poly / q^d.sq t^d.st)
    const long eq = d.sq - n.sq, et = d.st - n.st;
    QTPoly num = n.poly.shifted(eq > 0 ? eq : 0, et > 0 ? et : 0);
    QTPoly den = d.poly.shifted(eq < 0 ? -eq : 0, et < 0 ? -et : 0);
    return RatFun(num, den);
}

}  // namespace supermac
