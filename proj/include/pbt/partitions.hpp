#pragma once

#include <vector>

#include "pbt/types.hpp"

namespace pbt {

/// P(n) and the marked-partition count W(n) for every n up to maxN.
struct PartitionTable {
    int maxN = 0;
    std::vector<BigInt> pValues;  // P(0..maxN)
    std::vector<BigInt> wValues;  // W(1..maxN), stored at index n - 1

    static PartitionTable build(int maxN);

    BigInt const& p(int n) const { return pValues.at(static_cast<std::size_t>(n)); }
    BigInt const& w(int n) const { return wValues.at(static_cast<std::size_t>(n - 1)); }
};

/// Number of partitions of n (Euler's pentagonal recurrence).
BigInt partitionCount(int n);

/// All partitions of n as non-increasing part lists, in descending
/// lexicographic order. n = 0 yields the single empty partition.
std::vector<std::vector<int>> enumeratePartitions(int n);

/// W(n), the number of partitions of n with one distinguished part size.
/// Returned via W(n) = sum_{i<n} P(i); for small n the enumeration count is
/// checked against it.
BigInt markedPartitionCount(int n);

/// W(n) by walking every partition and counting its distinct part sizes,
/// i.e. d/dy of the y-marked generating function at y = 1.
BigInt markedPartitionCountByEnumeration(int n);

/// Coefficients 0..maxN of prod_k 1/(1 - x^k), or of x/(1 - x) times that
/// product when `marked` is set.
std::vector<BigInt> generatingCoefficients(int maxN, bool marked);

/// 1 + n P(n-1) / 2, exact.
Rational wUpperBoundExact(int n);

/// The same bound rounded up to an integer.
BigInt wUpperBound(int n);

struct BoundsCheck {
    BigInt p;
    BigInt w;
    Rational upper;
    bool lowerHolds = false;  // P(n) <= W(n)
    bool upperHolds = false;  // W(n) <= 1 + n P(n-1) / 2
    bool holds() const { return lowerHolds && upperHolds; }
};

BoundsCheck boundsCheck(int n);

}  // namespace pbt
