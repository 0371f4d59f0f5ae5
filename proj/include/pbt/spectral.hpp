#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "pbt/diagram_algebra.hpp"
#include "pbt/types.hpp"

namespace pbt {

/// rho = sigma_1 + ... + sigma_n in graph units.
SymbolicElement buildRho(int n);

/// Symbolic powers rho^0 .. rho^maxPower() on n ports, with their traces.
/// rho^0 is the identity diagram. maxPower() = W(n) + 2, the longest chain
/// the closure search may need. Immutable after construction.
class RhoAlgebra {
public:
    explicit RhoAlgebra(int n);

    int ports() const { return n_; }
    int maxPower() const { return static_cast<int>(powers_.size()) - 1; }
    /// W(n), the bound on the number of distinct eigenvalues.
    int classBound() const { return classBound_; }

    SymbolicElement const& rho() const { return powers_.at(1); }
    SymbolicElement const& power(int k) const { return powers_.at(static_cast<std::size_t>(k)); }
    DimPoly const& powerTrace(int k) const { return traces_.at(static_cast<std::size_t>(k)); }

    /// sum_k coeffs[k] rho^k, evaluated at d.
    RationalElement evaluatePolynomial(std::vector<Rational> const& coeffs, Rational const& d) const;

private:
    int n_;
    int classBound_;
    std::vector<SymbolicElement> powers_;
    std::vector<DimPoly> traces_;
};

/// Monic p with p(rho) = 0, found as the first linear dependence among
/// rho, rho^2, ... with d substituted. Coefficients ascending; the constant
/// term is always zero, p(x) = x q(x).
struct ClosurePolynomial {
    int n = 0;
    Rational d;
    std::vector<Rational> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    /// p(x) / x.
    std::vector<Rational> q() const { return {coeffs.begin() + 1, coeffs.end()}; }
    Rational operator()(Rational const& x) const;
    std::string toString() const;
};

ClosurePolynomial closurePolynomial(RhoAlgebra const& algebra, Rational const& d);
ClosurePolynomial closurePolynomial(int n, Rational const& d);

/// Distinct rational roots of a polynomial with rational coefficients
/// (ascending). Candidates are tried first, then a divisor search on the
/// deflated remainder. Throws IrrationalRootError if anything is left over.
std::vector<Rational> distinctRationalRoots(std::vector<Rational> coeffs,
                                            std::vector<Rational> const& candidates);

struct SpectralEntry {
    Rational lambda;
    /// tr(Pi_lambda): the multiplicity of lambda as an eigenvalue of rho.
    Rational projTrace;
    /// Pi_lambda = sum_k projector[k] rho^k (Lagrange basis polynomial over
    /// the distinct roots of the closure polynomial).
    std::vector<Rational> projector;
    bool retained = false;
};

struct Spectrum {
    int n = 0;
    Rational d;
    ClosurePolynomial closure;
    std::vector<SpectralEntry> entries;  // every distinct root, ascending

    std::vector<SpectralEntry> retained() const;
};

/// Exact eigenvalues of rho with projector-trace multiplicities. Roots with
/// zero projector trace (subspaces that vanish at this d) and the kernel are
/// kept in `entries` but not retained.
Spectrum computeSpectrum(RhoAlgebra const& algebra, Rational const& d);
Spectrum computeSpectrum(int n, Rational const& d);

RationalElement spectralProjector(RhoAlgebra const& algebra, Spectrum const& spectrum,
                                  SpectralEntry const& entry);

struct MomentCheck {
    Rational first;            // sum lambda m
    Rational expectedFirst;    // n d^n
    Rational second;           // sum lambda^2 m
    Rational expectedSecond;   // tr(rho^2) by loop counting
    bool holds() const { return first == expectedFirst && second == expectedSecond; }
};

MomentCheck momentCheck(RhoAlgebra const& algebra, Spectrum const& spectrum);

/// rho^{-1/2} on the support of rho, as sum over retained lambda of
/// lambda^{-1/2} Pi_lambda. The kernel and vanishing roots map to zero.
template <typename Real>
Element<Real> rhoInverseSqrt(RhoAlgebra const& algebra, Spectrum const& spectrum) {
    using std::sqrt;
    Element<Real> x(spectrum.n, toReal<Real>(spectrum.d));
    bool any = false;
    for (auto const& entry : spectrum.entries) {
        if (!entry.retained) continue;
        if (entry.lambda <= 0) throw PsdViolation("retained eigenvalue " + entry.lambda.str() + " <= 0");
        Real const weight = Real(1) / sqrt(toReal<Real>(entry.lambda));
        x += toRealElement<Real>(spectralProjector(algebra, spectrum, entry)) * weight;
        any = true;
    }
    if (!any) throw ClaimViolation("empty retained spectrum");
    return x;
}

template <typename Real>
Element<Real> rhoInverseSqrt(Spectrum const& spectrum) {
    return rhoInverseSqrt<Real>(RhoAlgebra(spectrum.n), spectrum);
}

}  // namespace pbt
