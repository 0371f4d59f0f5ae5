#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pbt/types.hpp"

namespace pbt {

/// A bijection on the port labels {1..n}, stored as its image list.
///
/// Composition is right-to-left throughout the project: `compose(p, q)` (and
/// `p * q`) applies q first, then p.
class Permutation {
public:
    static Permutation identity(int n);
    static Permutation transposition(int n, int i, int j);
    static Permutation fromImages(std::vector<int> images);

    /// Parses disjoint-cycle notation such as "(123)(4)". Labels are single
    /// digits unless a cycle contains spaces or commas, e.g. "(1 10 3)".
    /// Fixed points may be omitted; `n == 0` infers the size from the largest label.
    static Permutation fromCycles(std::string_view text, int n = 0);

    int size() const { return static_cast<int>(images_.size()); }

    /// Image of port i (1-based).
    int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }

    std::span<int const> images() const { return images_; }

    Permutation inverse() const;
    bool isIdentity() const;

    /// Canonical cycle notation: cycles ordered by smallest element, each
    /// starting at its smallest element, fixed points included.
    std::string toCycles() const;

    /// Cycle lengths in non-increasing order.
    std::vector<int> cycleType() const;
    int cycleCount() const;
    int cycleLengthContaining(int j) const;

    auto operator<=>(Permutation const&) const = default;
    bool operator==(Permutation const&) const = default;

private:
    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}

    std::vector<int> images_;
};

Permutation compose(Permutation const& p, Permutation const& q);
inline Permutation operator*(Permutation const& p, Permutation const& q) { return compose(p, q); }

/// All n! permutations of {1..n} in lexicographic order of image lists.
std::vector<Permutation> allPermutations(int n);

/// Cycle type plus the length of the cycle holding the marked port.
struct MarkedClass {
    std::vector<int> cycleType;  // non-increasing
    int markedLen = 0;

    int size() const;
    auto operator<=>(MarkedClass const&) const = default;
    bool operator==(MarkedClass const&) const = default;
};

std::string toString(MarkedClass const& c);

MarkedClass markedClassOf(Permutation const& p, int j);

/// Every marked class of S_n: partitions in descending-lexicographic order,
/// and within a partition the marked length in decreasing order.
std::vector<MarkedClass> enumerateMarkedClasses(int n);

/// Number of P in S_n with (P, 1) falling in class c.
BigInt markedClassSize(MarkedClass const& c);

BigInt factorial(int n);

}  // namespace pbt
