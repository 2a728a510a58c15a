#include "supermac/superpoly.hpp"

#include "json.hpp"

namespace supermac {

RatFun SymFun::coeff(const SuperPartition& L) const {
    auto it = coeffs.find(L);
    return it == coeffs.end() ? RatFun() : it->second;
}

void SymFun::add(const SuperPartition& L, const RatFun& c) {
    if (c.is_zero()) return;
    if (L.m() != m) throw SuperpolyError("SymFun: key " + L.str() + " has the wrong fermionic degree");
    auto [it, fresh] = coeffs.try_emplace(L, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) coeffs.erase(it);
}

SymFun SymFun::scaled(const RatFun& c) const {
    SymFun out{basis, m, {}};
    if (c.is_zero()) return out;
    for (const auto& [L, x] : coeffs) out.coeffs.emplace(L, x * c);
    return out;
}

namespace {

void check_compatible(const SymFun& a, const SymFun& b) {
    if (a.basis != b.basis) throw SuperpolyError("SymFun: mixing the " + basis_name(a.basis) + " and " +
                                                 basis_name(b.basis) + " bases");
    if (a.m != b.m && !a.coeffs.empty() && !b.coeffs.empty())
        throw SuperpolyError("SymFun: mixing fermionic degrees");
}

}  // namespace

SymFun operator+(const SymFun& a, const SymFun& b) {
    check_compatible(a, b);
    SymFun out = a.coeffs.empty() ? SymFun{b.basis, b.m, {}} : a;
    for (const auto& [L, c] : b.coeffs) out.add(L, c);
    return out;
}

SymFun operator-(const SymFun& a, const SymFun& b) {
    check_compatible(a, b);
    SymFun out = a.coeffs.empty() ? SymFun{b.basis, b.m, {}} : a;
    for (const auto& [L, c] : b.coeffs) out.add(L, -c);
    return out;
}

std::string to_json(const SymFun& f) {
    nlohmann::json j;
    j["basis"] = basis_name(f.basis);
    j["m"] = f.m;
    j["coeffs"] = nlohmann::json::array();
    for (const auto& [L, c] : f.coeffs) j["coeffs"].push_back({{"sp", L.str()}, {"c", c.str()}});
    return j.dump();
}

SymFun symfun_from_json(const std::string& text) {
    try {
        const auto j = nlohmann::json::parse(text);
        SymFun f{parse_basis(j.at("basis").get<std::string>()), j.at("m").get<int>(), {}};
        for (const auto& item : j.at("coeffs"))
            f.add(parse_superpartition(item.at("sp").get<std::string>()), parse_ratfun(item.at("c").get<std::string>()));
        return f;
    } catch (const nlohmann::json::exception& e) {
        throw SuperpolyError(std::string("malformed SymFun JSON: ") + e.what());
    }
}

}  // namespace supermac
