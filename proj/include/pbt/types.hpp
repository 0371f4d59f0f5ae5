#pragma once

#include <stdexcept>
#include <type_traits>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace pbt {

using BigInt   = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// 50 significant decimal digits; used by the high-precision metrics path.
using Real50 = boost::multiprecision::cpp_bin_float_50;

/// Bad input from a caller (out-of-range port, malformed cycle text, size caps).
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed. Reaching one of these means either a
/// bug or a counterexample to a structural property the pipeline relies on.
class ClaimViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class IrrationalRootError : public ClaimViolation {
public:
    using ClaimViolation::ClaimViolation;
};

class PsdViolation : public ClaimViolation {
public:
    using ClaimViolation::ClaimViolation;
};

inline bool isInteger(Rational const& q) { return denominator(q) == 1; }

inline Rational pow(Rational const& base, unsigned exponent) {
    Rational result{1};
    for (unsigned i = 0; i < exponent; ++i) result *= base;
    return result;
}

template <typename Real>
Real toReal(Rational const& q) {
    if constexpr (std::is_floating_point_v<Real>) {
        return q.convert_to<Real>();
    } else {
        return Real{numerator(q).str()} / Real{denominator(q).str()};
    }
}

}  // namespace pbt
