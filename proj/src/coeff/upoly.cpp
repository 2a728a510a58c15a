#include "supermac/coeff.hpp"

namespace supermac {

UPoly::UPoly(const RatFun& c) {
    if (!c.is_zero()) coeffs_.push_back(c);
}

UPoly::UPoly(std::vector<RatFun> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly UPoly::one_minus(const RatFun& c) { return UPoly(std::vector<RatFun>{RatFun(1), -c}); }

void UPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<RatFun> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
    return UPoly(std::move(r));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<RatFun> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
    return UPoly(std::move(r));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<RatFun> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UPoly(std::move(r));
}

UPoly UPoly::scaled(const RatFun& c) const {
    std::vector<RatFun> r(coeffs_);
    for (auto& x : r) x *= c;
    return UPoly(std::move(r));
}

std::optional<UPoly> UPoly::divide(const UPoly& d) const {
    if (d.is_zero()) throw CoeffError("division by the zero polynomial in u");
    if (is_zero()) return UPoly();
    if (degree() < d.degree()) return std::nullopt;
    std::vector<RatFun> rem = coeffs_;
    std::vector<RatFun> quot(coeffs_.size() - d.coeffs_.size() + 1);
    const RatFun lead_inv = d.coeffs_.back().inverse();
    for (std::size_t k = quot.size(); k-- > 0;) {
        const RatFun f = rem[k + d.coeffs_.size() - 1] * lead_inv;
        quot[k] = f;
        if (f.is_zero()) continue;
        for (std::size_t i = 0; i < d.coeffs_.size(); ++i) rem[k + i] -= f * d.coeffs_[i];
    }
    for (const auto& r : rem)
        if (!r.is_zero()) return std::nullopt;
    return UPoly(std::move(quot));
}

UPoly UPoly::rescaled_variable(const RatFun& c) const {
    std::vector<RatFun> r(coeffs_);
    RatFun pw(1);
    for (auto& x : r) {
        x *= pw;
        pw *= c;
    }
    return UPoly(std::move(r));
}

UPoly UPoly::substituted(SubMap map) const {
    std::vector<RatFun> r;
    r.reserve(coeffs_.size());
    for (const auto& x : coeffs_) r.push_back(substitute(x, map));
    return UPoly(std::move(r));
}

std::string UPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += coeffs_[k].str();
        if (k == 1) out += "*u";
        if (k > 1) out += "*u^" + std::to_string(k);
    }
    return out;
}

RatFun upoly_eval(const UPoly& p, const RatFun& u0) {
    RatFun r;
    for (std::size_t k = p.coeffs().size(); k-- > 0;) r = r * u0 + p.coeffs()[k];
    return r;
}

UPoly interpolate(const std::vector<RatFun>& xs, const std::vector<RatFun>& ys) {
    if (xs.size() != ys.size()) throw CoeffError("interpolate: size mismatch");
    // Newton divided differences.
    const std::size_t n = xs.size();
    std::vector<RatFun> dd = ys;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            const RatFun gap = xs[i] - xs[i - j];
            if (gap.is_zero()) throw CoeffError("interpolate: repeated node");
            dd[i] = (dd[i] - dd[i - 1]) / gap;
            if (i == j) break;
        }
    UPoly r;
    for (std::size_t k = n; k-- > 0;) r = r * UPoly(std::vector<RatFun>{-xs[k], RatFun(1)}) + UPoly(dd[k]);
    return r;
}

}  // namespace supermac
