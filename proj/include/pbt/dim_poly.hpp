#pragma once

#include <map>
#include <string>

#include "pbt/types.hpp"

namespace pbt {

/// Polynomial in the local dimension d with exact rational coefficients.
/// Negative exponents are allowed so that scaling by 1/d stays closed.
class DimPoly {
public:
    DimPoly() = default;
    DimPoly(Rational c) { if (c != 0) coeffs_.emplace(0, std::move(c)); }  // NOLINT(implicit)
    DimPoly(int c) : DimPoly(Rational{c}) {}                                // NOLINT(implicit)

    static DimPoly monomial(Rational c, int power);
    /// The polynomial "d".
    static DimPoly dim() { return monomial(Rational{1}, 1); }

    bool isZero() const { return coeffs_.empty(); }
    std::map<int, Rational> const& coefficients() const { return coeffs_; }

    Rational evaluate(Rational const& d) const;
    std::string toString() const;

    DimPoly& operator+=(DimPoly const& other);
    DimPoly& operator-=(DimPoly const& other);
    DimPoly& operator*=(DimPoly const& other);

    friend DimPoly operator+(DimPoly a, DimPoly const& b) { return a += b; }
    friend DimPoly operator-(DimPoly a, DimPoly const& b) { return a -= b; }
    friend DimPoly operator*(DimPoly a, DimPoly const& b) { return a *= b; }
    friend DimPoly operator-(DimPoly a) {
        for (auto& [k, c] : a.coeffs_) c = -c;
        return a;
    }
    bool operator==(DimPoly const& other) const { return coeffs_ == other.coeffs_; }

private:
    std::map<int, Rational> coeffs_;  // exponent -> nonzero coefficient
};

inline bool isZero(DimPoly const& p) { return p.isZero(); }

}  // namespace pbt
