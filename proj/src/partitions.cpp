#include "pbt/partitions.hpp"

#include <functional>
#include <set>

namespace pbt {

namespace {

void requireNonNegative(int n) {
    if (n < 0) throw ValidationError("partition count of negative n");
}

// Truncated power series with exact coefficients, degree <= maxDegree.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int maxDegree) : c_(static_cast<std::size_t>(maxDegree) + 1) {}

    static TruncatedSeries one(int maxDegree) {
        TruncatedSeries s(maxDegree);
        s.c_[0] = 1;
        return s;
    }

    // Multiply by 1 / (1 - x^k) = 1 + x^k + x^2k + ...
    void divideByOneMinusXPow(int k) {
        for (std::size_t i = static_cast<std::size_t>(k); i < c_.size(); ++i) c_[i] += c_[i - k];
    }

    void multiplyByXPow(int k) {
        for (std::size_t i = c_.size(); i-- > 0;) {
            c_[i] = i >= static_cast<std::size_t>(k) ? c_[i - k] : BigInt{0};
        }
    }

    std::vector<BigInt> const& coefficients() const { return c_; }

private:
    std::vector<BigInt> c_;
};

// P(0..maxN) via Euler's pentagonal number theorem.
std::vector<BigInt> pentagonalTable(int maxN) {
    std::vector<BigInt> p(static_cast<std::size_t>(maxN) + 1);
    p[0] = 1;
    for (int n = 1; n <= maxN; ++n) {
        BigInt sum{0};
        for (int k = 1;; ++k) {
            int const g1 = k * (3 * k - 1) / 2;
            if (g1 > n) break;
            int const sign = (k % 2 == 1) ? 1 : -1;
            sum += sign * p[static_cast<std::size_t>(n - g1)];
            int const g2 = k * (3 * k + 1) / 2;
            if (g2 <= n) sum += sign * p[static_cast<std::size_t>(n - g2)];
        }
        p[static_cast<std::size_t>(n)] = sum;
    }
    return p;
}

// Visits every partition of n with parts <= maxPart, non-increasing, in
// descending lexicographic order.
void visitPartitions(int n, int maxPart, std::vector<int>& prefix,
                     std::function<void(std::vector<int> const&)> const& visit) {
    if (n == 0) {
        visit(prefix);
        return;
    }
    for (int part = std::min(n, maxPart); part >= 1; --part) {
        prefix.push_back(part);
        visitPartitions(n - part, part, prefix, visit);
        prefix.pop_back();
    }
}

constexpr int kEnumerationCrossCheckLimit = 40;

}  // namespace

PartitionTable PartitionTable::build(int maxN) {
    requireNonNegative(maxN);
    PartitionTable table;
    table.maxN = maxN;
    table.pValues = pentagonalTable(maxN);
    BigInt running{0};
    for (int n = 1; n <= maxN; ++n) {
        running += table.pValues[static_cast<std::size_t>(n - 1)];
        table.wValues.push_back(running);
    }
    return table;
}

BigInt partitionCount(int n) {
    requireNonNegative(n);
    return pentagonalTable(n).back();
}

std::vector<std::vector<int>> enumeratePartitions(int n) {
    requireNonNegative(n);
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    visitPartitions(n, n, prefix, [&](std::vector<int> const& p) { out.push_back(p); });
    return out;
}

BigInt markedPartitionCountByEnumeration(int n) {
    if (n < 1) throw ValidationError("W(n) needs n >= 1");
    BigInt count{0};
    std::vector<int> prefix;
    visitPartitions(n, n, prefix, [&](std::vector<int> const& p) {
        count += std::set<int>(p.begin(), p.end()).size();
    });
    return count;
}

BigInt markedPartitionCount(int n) {
    if (n < 1) throw ValidationError("W(n) needs n >= 1");
    auto const p = pentagonalTable(n - 1);
    BigInt w{0};
    for (auto const& v : p) w += v;
    if (n <= kEnumerationCrossCheckLimit && markedPartitionCountByEnumeration(n) != w) {
        throw ClaimViolation("W(" + std::to_string(n) + ") enumeration disagrees with sum of P(i)");
    }
    return w;
}

std::vector<BigInt> generatingCoefficients(int maxN, bool marked) {
    if (maxN < 1) throw ValidationError("generating coefficients need maxN >= 1");
    auto series = TruncatedSeries::one(maxN);
    for (int k = 1; k <= maxN; ++k) series.divideByOneMinusXPow(k);
    if (marked) {
        series.multiplyByXPow(1);
        series.divideByOneMinusXPow(1);
    }
    return series.coefficients();
}

Rational wUpperBoundExact(int n) {
    if (n < 1) throw ValidationError("W(n) bound needs n >= 1");
    return Rational{1} + Rational{BigInt{n} * partitionCount(n - 1), BigInt{2}};
}

BigInt wUpperBound(int n) {
    auto const bound = wUpperBoundExact(n);
    BigInt const num = numerator(bound);
    BigInt const den = denominator(bound);
    return (num + den - 1) / den;
}

BoundsCheck boundsCheck(int n) {
    BoundsCheck check;
    check.p = partitionCount(n);
    check.w = markedPartitionCount(n);
    check.upper = wUpperBoundExact(n);
    check.lowerHolds = check.p <= check.w;
    check.upperHolds = Rational{check.w} <= check.upper;
    return check;
}

}  // namespace pbt
