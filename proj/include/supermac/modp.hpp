#pragma once

// Word-size prime-field helpers.  All primes are below 2^31 so a product of
// two residues fits in 64 bits without overflow.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace supermac::modp {

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a >= b ? a - b : a + p - b; }
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }
inline std::uint64_t neg(std::uint64_t a, std::uint64_t p) { return a == 0 ? 0 : p - a; }

inline std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mul(r, a, p);
        a = mul(a, a, p);
        e >>= 1;
    }
    return r;
}
/// Inverse by Fermat; precondition a != 0 mod p.
inline std::uint64_t inv(std::uint64_t a, std::uint64_t p) { return pow(a, p - 2, p); }

/// The k-th prime below 2^31 counting downwards (k = 0 is 2^31 - 1).
std::uint64_t prime(std::size_t k);

/// A fixed prime used by the modular-specialization scalar field.
inline constexpr std::uint64_t kFieldPrime = 2147483647ULL;

/// Value of a signed-integer-like quantity mod p.
template <class Int>
std::uint64_t reduce(const Int& v, std::uint64_t p);

/// An element of F_p for p = kFieldPrime, shaped like RatFun so that
/// coefficient-generic code can run over either.
class Fp {
public:
    Fp() = default;
    Fp(long c) {  // NOLINT: integer constants convert implicitly
        const long r = c % static_cast<long>(kFieldPrime);
        v_ = static_cast<std::uint64_t>(r < 0 ? r + static_cast<long>(kFieldPrime) : r);
    }
    static Fp raw(std::uint64_t v) {
        Fp f;
        f.v_ = v % kFieldPrime;
        return f;
    }

    std::uint64_t value() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    Fp inverse() const;

    Fp operator-() const { return raw(neg(v_, kFieldPrime)); }
    friend Fp operator+(Fp a, Fp b) { return raw(add(a.v_, b.v_, kFieldPrime)); }
    friend Fp operator-(Fp a, Fp b) { return raw(sub(a.v_, b.v_, kFieldPrime)); }
    friend Fp operator*(Fp a, Fp b) { return raw(mul(a.v_, b.v_, kFieldPrime)); }
    friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
    Fp& operator+=(Fp o) { return *this = *this + o; }
    Fp& operator-=(Fp o) { return *this = *this - o; }
    Fp& operator*=(Fp o) { return *this = *this * o; }
    Fp& operator/=(Fp o) { return *this = *this / o; }
    friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
    friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

private:
    std::uint64_t v_ = 0;
};

}  // namespace supermac::modp
