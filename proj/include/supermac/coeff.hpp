#pragma once

// Exact arithmetic for the coefficient field Q(q,t) and the ring Q(q,t)[u].
//
// Representation choices (frozen, they define the canonical text form):
//   * QTPoly is an integer-coefficient polynomial in q,t.  Terms are kept in
//     descending graded-lex order with q > t: total degree first, then the
//     q-degree.  The zero polynomial has no terms.
//   * RatFun is num/den with num, den in Z[q,t], gcd(num, den) = 1 in Z[q,t]
//     (integer content included) and den's graded-lex leading coefficient > 0.
//     Rational constants therefore live in the pair, e.g. 1/2 = (1)/(2).

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace supermac {

using BigInt = mpz_class;
using BigRat = mpq_class;  // GMP keeps gcd(num, den) = 1 and den > 0.

/// Raised by every coefficient-level failure (division by zero, bad text).
struct CoeffError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct QTTerm {
    std::uint32_t eq = 0;  // power of q
    std::uint32_t et = 0;  // power of t
    BigInt c;
};

/// true iff (aq,at) precedes (bq,bt) in descending graded-lex order, q > t.
constexpr bool grlex_greater(std::uint32_t aq, std::uint32_t at, std::uint32_t bq, std::uint32_t bt) {
    if (aq + at != bq + bt) return aq + at > bq + bt;
    return aq > bq;
}

class QTPoly {
public:
    QTPoly() = default;
    QTPoly(long c);  // NOLINT: integer constants convert implicitly
    QTPoly(const BigInt& c);  // NOLINT

    static QTPoly monomial(const BigInt& c, std::uint32_t eq, std::uint32_t et);
    static QTPoly q() { return monomial(1, 1, 0); }
    static QTPoly t() { return monomial(1, 0, 1); }
    /// Builds from arbitrary (possibly repeated, possibly zero) terms.
    static QTPoly from_terms(std::vector<QTTerm> terms);

    const std::vector<QTTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].eq == 0 && terms_[0].et == 0); }
    bool is_one() const { return terms_.size() == 1 && terms_[0].eq == 0 && terms_[0].et == 0 && terms_[0].c == 1; }
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t size() const { return terms_.size(); }

    /// Leading term in graded-lex order (q > t).  Precondition: nonzero.
    const QTTerm& lead() const { return terms_.front(); }
    std::uint32_t deg_q() const;
    std::uint32_t deg_t() const;
    std::uint32_t min_q() const;
    std::uint32_t min_t() const;
    BigInt content() const;  // nonnegative gcd of coefficients (0 for zero)

    QTPoly operator-() const;
    QTPoly& operator+=(const QTPoly& o);
    QTPoly& operator-=(const QTPoly& o);
    QTPoly& operator*=(const QTPoly& o);
    friend QTPoly operator+(QTPoly a, const QTPoly& b) { return a += b; }
    friend QTPoly operator-(QTPoly a, const QTPoly& b) { return a -= b; }
    friend QTPoly operator*(const QTPoly& a, const QTPoly& b);
    friend bool operator==(const QTPoly& a, const QTPoly& b);
    friend bool operator!=(const QTPoly& a, const QTPoly& b) { return !(a == b); }

    QTPoly scaled(const BigInt& c) const;
    /// Divides every coefficient by c; precondition: c divides all of them.
    QTPoly divided_exact(const BigInt& c) const;
    /// Multiplies by q^dq t^dt.
    QTPoly shifted(std::uint32_t dq, std::uint32_t dt) const;
    /// Divides by q^dq t^dt; precondition: the monomial divides.
    QTPoly unshifted(std::uint32_t dq, std::uint32_t dt) const;
    QTPoly pow(unsigned k) const;

    /// Exact quotient this / d, or nullopt when d does not divide this in Z[q,t].
    std::optional<QTPoly> divide(const QTPoly& d) const;

    /// Value mod p at (q0, t0), p < 2^31.
    std::uint64_t eval_mod(std::uint64_t q0, std::uint64_t t0, std::uint64_t p) const;
    BigRat eval(const BigRat& q0, const BigRat& t0) const;

    std::string str() const;

private:
    std::vector<QTTerm> terms_;
};

/// gcd in Z[q,t], normalized so the graded-lex leading coefficient is positive.
QTPoly gcd(const QTPoly& a, const QTPoly& b);

/// An element of Q(q,t) in canonical form (see header comment).
class RatFun {
public:
    RatFun() : num_(), den_(1) {}
    RatFun(long c) : num_(c), den_(1) {}  // NOLINT
    RatFun(const BigInt& c) : num_(c), den_(1) {}  // NOLINT
    RatFun(const BigRat& c);  // NOLINT
    RatFun(const QTPoly& p) : num_(p), den_(1) {}  // NOLINT
    /// Normalizing constructor; throws CoeffError if den == 0.
    RatFun(const QTPoly& num, const QTPoly& den);

    static RatFun q() { return RatFun(QTPoly::q()); }
    static RatFun t() { return RatFun(QTPoly::t()); }
    /// q^a t^b with possibly negative exponents.
    static RatFun qt_power(long a, long b);

    const QTPoly& num() const { return num_; }
    const QTPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    RatFun operator-() const;
    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }
    friend bool operator==(const RatFun& a, const RatFun& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    RatFun inverse() const;
    RatFun pow(long k) const;

    /// Value at a rational point; throws CoeffError if the denominator vanishes there.
    BigRat eval(const BigRat& q0, const BigRat& t0) const;
    /// Value mod p; nullopt if the denominator vanishes mod p.
    std::optional<std::uint64_t> eval_mod(std::uint64_t q0, std::uint64_t t0, std::uint64_t p) const;

    /// Canonical text "(num)/(den)".
    std::string str() const;

private:
    struct Raw {};
    RatFun(QTPoly num, QTPoly den, Raw) : num_(std::move(num)), den_(std::move(den)) {}
    QTPoly num_;
    QTPoly den_;
};

/// Accumulates Σ w_i r_i over a running lcm of the denominators, so that the
/// numerator is reduced only once, in result().
class RatSum {
public:
    void add(const RatFun& r);
    void add(const RatFun& r, const BigRat& w);
    RatFun result() const { return RatFun(num_, den_); }

private:
    QTPoly num_;
    QTPoly den_ = QTPoly(1);
};

/// Substitution targets for one variable: the variable itself or its inverse.
enum class Sub { q, t, inv_q, inv_t };
struct SubMap {
    Sub q_to = Sub::q;
    Sub t_to = Sub::t;
};
/// The Laurent substitution map used for q,t -> 1/t,1/q.
inline constexpr SubMap kDualMap{Sub::inv_t, Sub::inv_q};
inline constexpr SubMap kInverseMap{Sub::inv_q, Sub::inv_t};

RatFun substitute(const RatFun& a, SubMap map);

/// Polynomial in u over Q(q,t); coeffs[k] multiplies u^k; no trailing zeros.
class UPoly {
public:
    UPoly() = default;
    UPoly(const RatFun& c);  // NOLINT
    explicit UPoly(std::vector<RatFun> coeffs);
    static UPoly u() { return UPoly(std::vector<RatFun>{RatFun(0), RatFun(1)}); }
    /// The linear factor (1 - c u).
    static UPoly one_minus(const RatFun& c);

    const std::vector<RatFun>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    RatFun coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : RatFun(0); }

    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    UPoly& operator+=(const UPoly& o) { return *this = *this + o; }
    UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
    UPoly scaled(const RatFun& c) const;
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    /// Exact division by a polynomial whose coefficients are in Q(q,t); nullopt on nonzero remainder.
    std::optional<UPoly> divide(const UPoly& d) const;
    /// u -> c*u.
    UPoly rescaled_variable(const RatFun& c) const;
    UPoly substituted(SubMap map) const;

    /// "c0 + c1*u + ..." with each coefficient in canonical RatFun form.
    std::string str() const;

private:
    void trim();
    std::vector<RatFun> coeffs_;
};

RatFun upoly_eval(const UPoly& p, const RatFun& u0);

/// Unique polynomial of degree < xs.size() through (xs[i], ys[i]); xs distinct.
UPoly interpolate(const std::vector<RatFun>& xs, const std::vector<RatFun>& ys);

/// Parsers for the text grammar: integers, q, t (and u for UPoly), + - * / ^,
/// parentheses; exponents are (optionally signed) integers.  Throws CoeffError
/// with the character offset of the first error.
RatFun parse_ratfun(std::string_view text);
UPoly parse_upoly(std::string_view text);

/// 1 - q^a t^b; negative exponents are cleared into the denominator.
RatFun one_minus_qt(long a, long b);

}  // namespace supermac
