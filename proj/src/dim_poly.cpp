#include "pbt/dim_poly.hpp"

namespace pbt {

DimPoly DimPoly::monomial(Rational c, int power) {
    DimPoly p;
    if (c != 0) p.coeffs_.emplace(power, std::move(c));
    return p;
}

Rational DimPoly::evaluate(Rational const& d) const {
    if (d == 0 && !coeffs_.empty() && coeffs_.begin()->first < 0) {
        throw ValidationError("negative power of d evaluated at d = 0");
    }
    Rational total{0};
    for (auto const& [k, c] : coeffs_) {
        Rational const term = k >= 0 ? pow(d, static_cast<unsigned>(k))
                                     : Rational{1} / pow(d, static_cast<unsigned>(-k));
        total += c * term;
    }
    return total;
}

std::string DimPoly::toString() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += it->second.str();
        if (it->first != 0) out += "*d^" + std::to_string(it->first);
    }
    return out;
}

DimPoly& DimPoly::operator+=(DimPoly const& other) {
    for (auto const& [k, c] : other.coeffs_) {
        auto [it, inserted] = coeffs_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    return *this;
}

DimPoly& DimPoly::operator-=(DimPoly const& other) { return *this += -other; }

DimPoly& DimPoly::operator*=(DimPoly const& other) {
    std::map<int, Rational> product;
    for (auto const& [ka, ca] : coeffs_) {
        for (auto const& [kb, cb] : other.coeffs_) product[ka + kb] += ca * cb;
    }
    std::erase_if(product, [](auto const& entry) { return entry.second == 0; });
    coeffs_ = std::move(product);
    return *this;
}

}  // namespace pbt
