#include "pbt/metrics.hpp"

namespace pbt {

namespace {

double checkedSqrt(double v) {
    if (v < 0) throw ValidationError("negative radicand in closed form");
    return std::sqrt(v);
}

std::vector<std::vector<DimPoly>> sigmaMoments(RhoAlgebra const& algebra, int port, int maxPower) {
    int const n = algebra.ports();
    auto const s = sigma(port, n);
    auto const& rho = algebra.rho();
    std::vector<std::vector<DimPoly>> table(static_cast<std::size_t>(maxPower) + 1,
                                            std::vector<DimPoly>(static_cast<std::size_t>(maxPower) + 1));
    for (int k = 0; k <= maxPower; ++k) {
        auto walker = s * algebra.power(k) * s;
        for (int j = 0; j <= maxPower; ++j) {
            table[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = walker.trace();
            if (j < maxPower) walker = rho * walker;
        }
    }
    return table;
}

}  // namespace

Precision precisionForDigits(int digits) {
    if (digits < 15 || digits > 50) throw ValidationError("precision must be between 15 and 50 digits");
    return digits <= 15 ? Precision::Double : Precision::Digits50;
}

Fidelities fidelities(int n, double d, double S) {
    double const fe = n * S / (d * d);
    return {fe, (d * fe + 1) / (d + 1)};
}

FidelityBounds bounds(int n, double d) { return {n / (d * d + n - 1), n / (d * d)}; }

double closedFormS(int n, double d) {
    switch (n) {
    case 2:
        return (d + checkedSqrt(d * d - 1)) / (2 * d);
    case 3: {
        double const a = checkedSqrt(d - 2) * checkedSqrt(d + 1);
        double const b = checkedSqrt(d + 2) * checkedSqrt(d - 1);
        return (5 * d * d + d * (2 * a + 2 * b) - 2 * a + 2 * b - 2) / (9 * d * d);
    }
    case 4: {
        double const r2m = checkedSqrt(d * d - 2 * d);
        double const r2p = checkedSqrt(d * d + 2 * d);
        double const r3m = checkedSqrt(d - 3) * checkedSqrt(d + 1);
        double const r3p = checkedSqrt(d + 3) * checkedSqrt(d - 1);
        double const r4 = checkedSqrt(d * d - 4);
        double const bracket = 7 * d * d * d + d * d * (2 * r2m + 2 * r2p + r3m + r3p + 3 * r4) -
                               3 * d * (1 + r3m + r3p) - 2 * r2m - 2 * r2p + 2 * r3m + 2 * r3p - 3 * r4;
        return bracket / (16 * d * d * d);
    }
    default:
        throw ValidationError("closed form only available for 2, 3 or 4 ports");
    }
}

PgmEvaluator::PgmEvaluator(int n) : algebra_(n) {
    // Projector polynomials have degree below the closure degree.
    int const maxPower = algebra_.maxPower() - 1;
    moments_ = sigmaMoments(algebra_, 1, maxPower);
    if (n > 1 && sigmaMoments(algebra_, n, maxPower) != moments_) {
        throw ClaimViolation("moments differ between ports 1 and n; port symmetry is broken");
    }
}

std::vector<PgmEvaluator::PairTrace> PgmEvaluator::pairTraces(Spectrum const& spectrum) const {
    if (spectrum.n != ports()) throw ValidationError("spectrum computed for a different port count");
    std::size_t const size = moments_.size();
    std::vector<std::vector<Rational>> g(size, std::vector<Rational>(size));
    for (std::size_t j = 0; j < size; ++j) {
        for (std::size_t k = 0; k < size; ++k) g[j][k] = moments_[j][k].evaluate(spectrum.d);
    }

    auto const retained = spectrum.retained();
    std::vector<PairTrace> out;
    for (auto const& a : retained) {
        for (auto const& b : retained) {
            if (a.projector.size() > size || b.projector.size() > size) {
                throw ClaimViolation("projector degree exceeds the moment table");
            }
            Rational trace{0};
            for (std::size_t j = 0; j < a.projector.size(); ++j) {
                if (a.projector[j] == 0) continue;
                Rational row{0};
                for (std::size_t k = 0; k < b.projector.size(); ++k) row += g[j][k] * b.projector[k];
                trace += a.projector[j] * row;
            }
            if (trace < 0) {
                throw PsdViolation("negative pair trace for eigenvalues " + a.lambda.str() + ", " +
                                   b.lambda.str());
            }
            out.push_back({a.lambda, b.lambda, std::move(trace)});
        }
    }
    return out;
}

double PgmEvaluator::successProbability(Rational const& d, Precision precision) const {
    if (precision == Precision::Digits50) return successProbability<Real50>(d).convert_to<double>();
    return successProbability<double>(d);
}

MetricsRow PgmEvaluator::row(Rational const& d, Precision precision) const {
    MetricsRow r;
    r.n = ports();
    r.d = d;
    r.S = successProbability(d, precision);
    double const dd = d.convert_to<double>();
    auto const f = fidelities(r.n, dd, r.S);
    auto const b = bounds(r.n, dd);
    r.Fe = f.Fe;
    r.F = f.F;
    r.FeLow = b.low;
    r.FeUp = b.up;
    return r;
}

double successProbability(int n, Rational const& d, Precision precision) {
    return PgmEvaluator(n).successProbability(d, precision);
}

std::vector<MetricsRow> sweep(int n, std::vector<Rational> const& dims, Precision precision) {
    PgmEvaluator const evaluator(n);
    std::vector<MetricsRow> rows;
    rows.reserve(dims.size());
    for (auto const& d : dims) {
        if (d < 1) throw ValidationError("dimension must be at least 1");
        rows.push_back(evaluator.row(d, precision));
    }
    return rows;
}

bool rowInvariantsHold(MetricsRow const& row, double tol) {
    return row.FeLow <= row.Fe + tol && row.Fe <= row.FeUp + tol && row.F + tol >= row.Fe;
}

}  // namespace pbt
