#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "pbt/spectral.hpp"

namespace pbt {

/// Arithmetic used once irrational numbers enter (the square roots of the
/// eigenvalues). Everything before that point is exact.
enum class Precision { Double, Digits50 };

/// Maps a requested number of significant digits to an arithmetic mode.
/// Accepts 15..50.
Precision precisionForDigits(int digits);

struct MetricsRow {
    int n = 0;
    Rational d;
    double S = 0;
    double Fe = 0;
    double F = 0;
    double FeLow = 0;
    double FeUp = 0;
};

struct Fidelities {
    double Fe = 0;
    double F = 0;
};

struct FidelityBounds {
    double low = 0;  // n / (d^2 + n - 1)
    double up = 0;   // n / d^2
};

/// Fe = n S / d^2 and F = (d Fe + 1) / (d + 1).
Fidelities fidelities(int n, double d, double S);

FidelityBounds bounds(int n, double d);

/// The literal closed-form success probabilities for n = 2, 3, 4. Throws
/// ValidationError for other n or when a radicand is negative (n = 4, d < 3).
double closedFormS(int n, double d);

/// Pretty-good-measurement success probability for a fixed number of ports.
///
/// S = tr(X sigma_1 X sigma_1) / d^n with X = rho^{-1/2}. Writing
/// X = sum_l l^{-1/2} Pi_l, every pair (l, m) contributes
/// tr(Pi_l sigma_1 Pi_m sigma_1) / sqrt(l m); those pair traces are exact
/// rationals (squared Frobenius norms, hence nonnegative) obtained from the
/// symbolic moments tr(rho^j sigma_1 rho^k sigma_1). Only the final weighted
/// sum is carried out in floating point.
class PgmEvaluator {
public:
    explicit PgmEvaluator(int n);

    int ports() const { return algebra_.ports(); }
    RhoAlgebra const& algebra() const { return algebra_; }

    /// tr(rho^j sigma_1 rho^k sigma_1), symbolic in d.
    DimPoly const& moment(int j, int k) const {
        return moments_.at(static_cast<std::size_t>(j)).at(static_cast<std::size_t>(k));
    }

    struct PairTrace {
        Rational lambda;
        Rational mu;
        Rational trace;  // tr(Pi_lambda sigma_1 Pi_mu sigma_1)
    };

    std::vector<PairTrace> pairTraces(Spectrum const& spectrum) const;

    template <typename Real>
    Real successProbability(Spectrum const& spectrum) const {
        using std::sqrt;
        Rational const norm = pow(spectrum.d, static_cast<unsigned>(ports()));
        Real total(0);
        for (auto const& pair : pairTraces(spectrum)) {
            total += toReal<Real>(pair.trace / norm) / sqrt(toReal<Real>(pair.lambda * pair.mu));
        }
        if (total < Real(0) || total > Real(1) + Real(1e-12)) {
            throw ClaimViolation("success probability outside [0, 1]; normalisation is broken");
        }
        return total;
    }

    template <typename Real>
    Real successProbability(Rational const& d) const {
        return successProbability<Real>(computeSpectrum(algebra_, d));
    }

    double successProbability(Rational const& d, Precision precision) const;

    MetricsRow row(Rational const& d, Precision precision = Precision::Double) const;

private:
    RhoAlgebra algebra_;
    std::vector<std::vector<DimPoly>> moments_;
};

double successProbability(int n, Rational const& d, Precision precision = Precision::Double);

/// S = tr(X sigma_i X sigma_i) / d^n evaluated by multiplying the real-valued
/// element X = rho^{-1/2} out in the diagram algebra.
template <typename Real>
Real successProbabilityDirect(RhoAlgebra const& algebra, Spectrum const& spectrum, int port) {
    auto const x = rhoInverseSqrt<Real>(algebra, spectrum);
    auto const s = toRealElement<Real>(evaluateAt(sigma(port, spectrum.n), spectrum.d));
    Real const norm = toReal<Real>(pow(spectrum.d, static_cast<unsigned>(spectrum.n)));
    return (x * s * x * s).trace() / norm;
}

std::vector<MetricsRow> sweep(int n, std::vector<Rational> const& dims,
                              Precision precision = Precision::Double);

/// FeLow <= Fe <= FeUp and F >= Fe, with slack `tol`.
bool rowInvariantsHold(MetricsRow const& row, double tol = 1e-12);

}  // namespace pbt
