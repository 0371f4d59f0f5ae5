#include "pbt/spectral.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pbt/partitions.hpp"

namespace pbt {

namespace {

using Poly = std::vector<Rational>;  // ascending coefficients

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Rational evaluate(Poly const& p, Rational const& x) {
    Rational acc{0};
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// p / (x - r), assuming r is a root.
Poly deflate(Poly const& p, Rational const& r) {
    Poly out(p.size() - 1);
    Rational carry{0};
    for (std::size_t k = p.size() - 1; k-- > 0;) {
        carry = p[k + 1] + carry * r;
        out[k] = carry;
    }
    return out;
}

std::string polyString(Poly const& p) {
    std::string out;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (k > 0) out += ", ";
        out += p[k].str();
    }
    return "[" + out + "]";
}

// Positive divisors of |v| by trial division. Returns false if v has a prime
// factor too large to split.
bool divisors(BigInt v, std::vector<BigInt>& out) {
    if (v < 0) v = -v;
    std::vector<std::pair<BigInt, int>> factors;
    for (BigInt f = 2; f * f <= v; ++f) {
        if (f > 2'000'000) return false;
        int e = 0;
        while (v % f == 0) {
            v /= f;
            ++e;
        }
        if (e > 0) factors.emplace_back(f, e);
    }
    if (v > 1) factors.emplace_back(v, 1);
    out = {BigInt{1}};
    for (auto const& [f, e] : factors) {
        std::size_t const current = out.size();
        BigInt power{1};
        for (int k = 1; k <= e; ++k) {
            power *= f;
            for (std::size_t i = 0; i < current; ++i) out.push_back(out[i] * power);
        }
    }
    return true;
}

// Ascending coefficients of prod_{mu != lambda} (x - mu) / (lambda - mu).
Poly lagrangeBasis(std::vector<Rational> const& roots, std::size_t which) {
    Poly basis{Rational{1}};
    for (std::size_t m = 0; m < roots.size(); ++m) {
        if (m == which) continue;
        Rational const scale = Rational{1} / (roots[which] - roots[m]);
        Poly next(basis.size() + 1);
        for (std::size_t k = 0; k < basis.size(); ++k) {
            next[k + 1] += basis[k] * scale;
            next[k] -= basis[k] * roots[m] * scale;
        }
        basis = std::move(next);
    }
    return basis;
}

}  // namespace

SymbolicElement buildRho(int n) {
    if (n < 1) throw ValidationError("rho needs at least one port");
    auto rho = sigma(1, n);
    for (int i = 2; i <= n; ++i) rho += sigma(i, n);
    return rho;
}

RhoAlgebra::RhoAlgebra(int n)
    : n_(n), classBound_(static_cast<int>(markedPartitionCount(n))) {
    auto const rho = buildRho(n);
    powers_.push_back(identityElement(n));
    for (int k = 1; k <= classBound_ + 2; ++k) powers_.push_back(powers_.back() * rho);
    for (auto const& p : powers_) traces_.push_back(p.trace());
}

RationalElement RhoAlgebra::evaluatePolynomial(std::vector<Rational> const& coeffs,
                                               Rational const& d) const {
    if (static_cast<int>(coeffs.size()) > maxPower() + 1) {
        throw ValidationError("polynomial degree exceeds the stored powers of rho");
    }
    RationalElement out(n_, d);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0) continue;
        for (auto const& [key, c] : powers_[k].terms()) out.accumulate(key, coeffs[k] * c.evaluate(d));
    }
    return out;
}

Rational ClosurePolynomial::operator()(Rational const& x) const { return evaluate(coeffs, x); }

std::string ClosurePolynomial::toString() const { return polyString(coeffs); }

ClosurePolynomial closurePolynomial(RhoAlgebra const& algebra, Rational const& d) {
    if (d <= 0) throw ValidationError("dimension must be positive");

    std::map<TermKey, std::size_t> column;
    for (int k = 1; k <= algebra.maxPower(); ++k) {
        for (auto const& [key, c] : algebra.power(k).terms()) column.try_emplace(key, column.size());
    }

    struct Row {
        std::vector<Rational> vec;
        std::vector<Rational> combo;  // coefficients on rho^1 .. rho^k
        std::size_t pivot;
    };
    std::vector<Row> rows;
    int const maxPower = algebra.maxPower();

    for (int k = 1; k <= maxPower; ++k) {
        std::vector<Rational> vec(column.size());
        for (auto const& [key, c] : algebra.power(k).terms()) vec[column.at(key)] = c.evaluate(d);
        std::vector<Rational> combo(static_cast<std::size_t>(maxPower) + 1);
        combo[static_cast<std::size_t>(k)] = 1;

        for (auto const& row : rows) {
            Rational const f = vec[row.pivot];
            if (f == 0) continue;
            for (std::size_t i = 0; i < vec.size(); ++i) vec[i] -= f * row.vec[i];
            for (std::size_t i = 0; i < combo.size(); ++i) combo[i] -= f * row.combo[i];
        }

        auto const pivot = std::find_if(vec.begin(), vec.end(), [](Rational const& v) { return v != 0; });
        if (pivot == vec.end()) {
            combo.resize(static_cast<std::size_t>(k) + 1);
            return ClosurePolynomial{algebra.ports(), d, std::move(combo)};
        }
        auto const pivotIndex = static_cast<std::size_t>(pivot - vec.begin());
        Rational const scale = Rational{1} / *pivot;
        for (auto& v : vec) v *= scale;
        for (auto& v : combo) v *= scale;
        rows.push_back(Row{std::move(vec), std::move(combo), pivotIndex});
    }
    throw ClaimViolation("no closure polynomial within " + std::to_string(maxPower) + " powers of rho");
}

ClosurePolynomial closurePolynomial(int n, Rational const& d) { return closurePolynomial(RhoAlgebra(n), d); }

std::vector<Rational> distinctRationalRoots(std::vector<Rational> coeffs,
                                            std::vector<Rational> const& candidates) {
    trim(coeffs);
    if (coeffs.empty()) throw ValidationError("the zero polynomial has no finite root set");
    std::set<Rational> roots;
    auto peel = [&](Rational const& r) {
        while (coeffs.size() > 1 && evaluate(coeffs, r) == 0) {
            coeffs = deflate(coeffs, r);
            roots.insert(r);
        }
    };
    for (auto const& c : candidates) peel(c);
    peel(Rational{0});

    if (coeffs.size() > 1) {
        // Integer-coefficient primitive form, then rational-root theorem.
        BigInt lcm{1};
        for (auto const& c : coeffs) lcm = boost::multiprecision::lcm(lcm, denominator(c));
        std::vector<BigInt> ints;
        for (auto const& c : coeffs) ints.push_back(numerator(Rational{c * lcm}));
        std::vector<BigInt> constantDivisors;
        std::vector<BigInt> leadingDivisors;
        if (!divisors(ints.front(), constantDivisors) || !divisors(ints.back(), leadingDivisors)) {
            throw IrrationalRootError("cannot factor coefficients to search for roots of " +
                                      polyString(coeffs));
        }
        for (auto const& num : constantDivisors) {
            for (auto const& den : leadingDivisors) {
                peel(Rational{num, den});
                peel(Rational{-num, den});
            }
        }
    }
    if (coeffs.size() > 1) {
        throw IrrationalRootError("closure polynomial has non-rational roots; unresolved factor " +
                                  polyString(coeffs));
    }
    return {roots.begin(), roots.end()};
}

std::vector<SpectralEntry> Spectrum::retained() const {
    std::vector<SpectralEntry> out;
    std::copy_if(entries.begin(), entries.end(), std::back_inserter(out),
                 [](SpectralEntry const& e) { return e.retained; });
    return out;
}

Spectrum computeSpectrum(RhoAlgebra const& algebra, Rational const& d) {
    int const n = algebra.ports();
    Spectrum spectrum{n, d, closurePolynomial(algebra, d), {}};

    std::vector<Rational> candidates;
    for (int i = -(n - 1); i <= n - 1; ++i) candidates.push_back(d + i);
    auto const roots = distinctRationalRoots(spectrum.closure.coeffs, candidates);

    for (std::size_t r = 0; r < roots.size(); ++r) {
        SpectralEntry entry;
        entry.lambda = roots[r];
        entry.projector = lagrangeBasis(roots, r);
        entry.projTrace = algebra.evaluatePolynomial(entry.projector, d).trace();

        if (entry.projTrace < 0) {
            throw PsdViolation("projector for eigenvalue " + entry.lambda.str() + " has negative trace " +
                               entry.projTrace.str());
        }
        if (isInteger(d) && !isInteger(entry.projTrace)) {
            throw ClaimViolation("non-integer multiplicity " + entry.projTrace.str() + " for eigenvalue " +
                                 entry.lambda.str());
        }
        if (entry.projTrace > 0 && entry.lambda < 0) {
            throw PsdViolation("negative eigenvalue " + entry.lambda.str() + " with multiplicity " +
                               entry.projTrace.str());
        }
        entry.retained = entry.projTrace > 0 && entry.lambda > 0;
        spectrum.entries.push_back(std::move(entry));
    }
    if (spectrum.retained().empty()) throw ClaimViolation("empty retained spectrum");
    return spectrum;
}

Spectrum computeSpectrum(int n, Rational const& d) { return computeSpectrum(RhoAlgebra(n), d); }

RationalElement spectralProjector(RhoAlgebra const& algebra, Spectrum const& spectrum,
                                  SpectralEntry const& entry) {
    return algebra.evaluatePolynomial(entry.projector, spectrum.d);
}

MomentCheck momentCheck(RhoAlgebra const& algebra, Spectrum const& spectrum) {
    MomentCheck check;
    for (auto const& e : spectrum.entries) {
        if (!e.retained) continue;
        check.first += e.lambda * e.projTrace;
        check.second += e.lambda * e.lambda * e.projTrace;
    }
    check.expectedFirst = Rational{spectrum.n} * pow(spectrum.d, static_cast<unsigned>(spectrum.n));
    check.expectedSecond = algebra.powerTrace(2).evaluate(spectrum.d);
    return check;
}

}  // namespace pbt
