#include "supermac/coeff.hpp"

#include <cctype>

namespace supermac {

namespace {

// Recursive-descent parser shared by RatFun and UPoly; Ops supplies the
// arithmetic of the target type.
template <class V, class Ops>
class Parser {
public:
    Parser(std::string_view s, Ops ops) : s_(s), ops_(ops) {}

    V parse() {
        V v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw CoeffError("parse error at offset " + std::to_string(pos_) + ": " + what);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    V expr() {
        V v = term();
        for (;;) {
            if (eat('+'))
                v = ops_.add(v, term());
            else if (eat('-'))
                v = ops_.sub(v, term());
            else
                return v;
        }
    }
    V term() {
        V v = unary();
        for (;;) {
            if (eat('*')) {
                v = ops_.mul(v, unary());
            } else if (eat('/')) {
                const std::size_t at = pos_;
                V d = unary();
                try {
                    v = ops_.div(v, d);
                } catch (const CoeffError& e) {
                    pos_ = at;
                    fail(e.what());
                }
            } else {
                return v;
            }
        }
    }
    V unary() {
        if (eat('-')) return ops_.neg(unary());
        if (eat('+')) return unary();
        return power();
    }
    V power() {
        V base = atom();
        if (!eat('^')) return base;
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        skip();
        const std::size_t at = pos_;
        long e = integer();
        try {
            return ops_.pow(base, neg ? -e : e);
        } catch (const CoeffError& err) {
            pos_ = at;
            fail(err.what());
        }
    }
    long integer() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer exponent");
        if (pos_ - start > 6) fail("exponent too large");
        return std::stol(std::string(s_.substr(start, pos_ - start)));
    }
    V atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            V v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return ops_.integer(BigInt(std::string(s_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            ++pos_;
            if (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) fail("unknown identifier");
            if (auto v = ops_.variable(c)) return *v;
            --pos_;
            fail(std::string("unknown variable '") + c + "'");
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    Ops ops_;
};

struct RatOps {
    RatFun integer(const BigInt& v) const { return RatFun(v); }
    std::optional<RatFun> variable(char c) const {
        if (c == 'q') return RatFun::q();
        if (c == 't') return RatFun::t();
        return std::nullopt;
    }
    RatFun add(const RatFun& a, const RatFun& b) const { return a + b; }
    RatFun sub(const RatFun& a, const RatFun& b) const { return a - b; }
    RatFun mul(const RatFun& a, const RatFun& b) const { return a * b; }
    RatFun div(const RatFun& a, const RatFun& b) const { return a / b; }
    RatFun neg(const RatFun& a) const { return -a; }
    RatFun pow(const RatFun& a, long e) const { return a.pow(e); }
};

struct UOps {
    UPoly integer(const BigInt& v) const { return UPoly(RatFun(v)); }
    std::optional<UPoly> variable(char c) const {
        if (c == 'q') return UPoly(RatFun::q());
        if (c == 't') return UPoly(RatFun::t());
        if (c == 'u') return UPoly::u();
        return std::nullopt;
    }
    UPoly add(const UPoly& a, const UPoly& b) const { return a + b; }
    UPoly sub(const UPoly& a, const UPoly& b) const { return a - b; }
    UPoly mul(const UPoly& a, const UPoly& b) const { return a * b; }
    UPoly div(const UPoly& a, const UPoly& b) const {
        if (b.degree() > 0) throw CoeffError("division by a polynomial in u");
        if (b.is_zero()) throw CoeffError("division by zero");
        return a.scaled(b.coeff(0).inverse());
    }
    UPoly neg(const UPoly& a) const { return a.scaled(RatFun(-1)); }
    UPoly pow(const UPoly& a, long e) const {
        if (e < 0) {
            if (a.degree() > 0) throw CoeffError("negative power of a polynomial in u");
            return UPoly(a.coeff(0).pow(e));
        }
        UPoly r(RatFun(1));
        for (long i = 0; i < e; ++i) r = r * a;
        return r;
    }
};

}  // namespace

RatFun parse_ratfun(std::string_view text) { return Parser<RatFun, RatOps>(text, RatOps{}).parse(); }

UPoly parse_upoly(std::string_view text) { return Parser<UPoly, UOps>(text, UOps{}).parse(); }

}  // namespace supermac
