#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "pbt/partitions.hpp"
#include "pbt/permutation.hpp"

using namespace pbt;

namespace {

Permutation randomPermutation(int n, std::mt19937& rng) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    std::shuffle(images.begin(), images.end(), rng);
    return Permutation::fromImages(images);
}

// Brute-force orbit representative of (p, j) under simultaneous relabelling:
// the lexicographically smallest (q p q^-1, q(j)) over all q.
std::pair<std::vector<int>, int> orbitRepresentative(Permutation const& p, int j) {
    std::pair<std::vector<int>, int> best;
    bool first = true;
    for (auto const& q : allPermutations(p.size())) {
        auto const c = q * p * q.inverse();
        std::pair<std::vector<int>, int> key{{c.images().begin(), c.images().end()}, q(j)};
        if (first || key < best) best = key;
        first = false;
    }
    return best;
}

}  // namespace

TEST_CASE("identity") {
    CHECK(Permutation::identity(3).toCycles() == "(1)(2)(3)");
    CHECK_THROWS_AS(Permutation::identity(0), ValidationError);
    CHECK(Permutation::identity(2).inverse() == Permutation::identity(2));

    std::mt19937 rng(7);
    auto const p = randomPermutation(4, rng);
    CHECK(compose(Permutation::identity(4), p) == p);
    CHECK(compose(p, Permutation::identity(4)) == p);
}

TEST_CASE("composition applies the right operand first") {
    auto const p = Permutation::fromCycles("(12)", 3);
    auto const q = Permutation::fromCycles("(23)", 3);
    auto const r = compose(p, q);
    CHECK(r(1) == 2);
    CHECK(r(2) == 3);
    CHECK(r(3) == 1);
    CHECK(r.toCycles() == "(123)");

    CHECK_THROWS_AS(compose(Permutation::identity(2), Permutation::identity(3)), ValidationError);
}

TEST_CASE("group laws on random permutations") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        int const n = 1 + trial % 8;
        auto const a = randomPermutation(n, rng);
        auto const b = randomPermutation(n, rng);
        auto const c = randomPermutation(n, rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * a.inverse() == Permutation::identity(n));
        CHECK(a.inverse() * a == Permutation::identity(n));
    }
}

TEST_CASE("cycle notation") {
    auto const p = Permutation::fromCycles("(123)(4)", 4);
    CHECK(p(1) == 2);
    CHECK(p(2) == 3);
    CHECK(p(3) == 1);
    CHECK(p(4) == 4);

    CHECK(Permutation::fromCycles("(1)(2)") == Permutation::identity(2));
    CHECK(Permutation::fromCycles("(21)").toCycles() == "(12)");
    CHECK(Permutation::fromCycles("(31)(2)").toCycles() == "(13)(2)");
    CHECK(Permutation::fromCycles("(2 11)(3 4)", 12).toCycles() ==
          "(1)(2 11)(3 4)(5)(6)(7)(8)(9)(10)(12)");

    CHECK_THROWS_AS(Permutation::fromCycles("(121)"), ValidationError);
    CHECK_THROWS_AS(Permutation::fromCycles("(15)", 4), ValidationError);
    CHECK_THROWS_AS(Permutation::fromCycles("(12)(2)"), ValidationError);
    CHECK_THROWS_AS(Permutation::fromCycles("(1a)"), ValidationError);
    CHECK_THROWS_AS(Permutation::fromCycles("(12"), ValidationError);

    std::mt19937 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        auto const q = randomPermutation(1 + trial % 12, rng);
        CHECK(Permutation::fromCycles(q.toCycles(), q.size()) == q);
    }
}

TEST_CASE("markedClassOf") {
    auto const c = markedClassOf(Permutation::fromCycles("(12)(3)(4)"), 1);
    CHECK(c.cycleType == std::vector<int>{2, 1, 1});
    CHECK(c.markedLen == 2);

    for (int j = 1; j <= 3; ++j) {
        auto const id = markedClassOf(Permutation::identity(3), j);
        CHECK(id.cycleType == std::vector<int>{1, 1, 1});
        CHECK(id.markedLen == 1);
    }
    CHECK_THROWS_AS(markedClassOf(Permutation::identity(3), 4), ValidationError);

    std::set<MarkedClass> seen;
    for (auto const& p : allPermutations(4)) {
        for (int j = 1; j <= 4; ++j) seen.insert(markedClassOf(p, j));
    }
    CHECK(seen.size() == 7);
}

TEST_CASE("marked classes coincide with relabelling orbits") {
    for (int n = 1; n <= 5; ++n) {
        std::map<std::pair<std::vector<int>, int>, MarkedClass> orbitToClass;
        std::set<MarkedClass> classes;
        for (auto const& p : allPermutations(n)) {
            for (int j = 1; j <= n; ++j) {
                auto const cls = markedClassOf(p, j);
                auto [it, inserted] = orbitToClass.try_emplace(orbitRepresentative(p, j), cls);
                CHECK(it->second == cls);
                classes.insert(cls);
            }
        }
        // Same class <=> same orbit.
        CHECK(classes.size() == orbitToClass.size());
    }
}

TEST_CASE("markedClassOf is conjugation invariant") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        int const n = 1 + trial % 5;
        auto const p = randomPermutation(n, rng);
        auto const q = randomPermutation(n, rng);
        int const j = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
        CHECK(markedClassOf(q * p * q.inverse(), q(j)) == markedClassOf(p, j));
    }
}

TEST_CASE("enumerateMarkedClasses") {
    auto const three = enumerateMarkedClasses(3);
    std::vector<MarkedClass> const expected{
        {{3}, 3}, {{2, 1}, 2}, {{2, 1}, 1}, {{1, 1, 1}, 1}};
    CHECK(three == expected);
    CHECK(enumerateMarkedClasses(1).size() == 1);
    CHECK(enumerateMarkedClasses(5).size() == 12);
    CHECK_THROWS_AS(enumerateMarkedClasses(0), ValidationError);

    for (int n = 1; n <= 12; ++n) {
        auto const classes = enumerateMarkedClasses(n);
        CHECK(std::set<MarkedClass>(classes.begin(), classes.end()).size() == classes.size());
        CHECK(BigInt(classes.size()) == markedPartitionCount(n));
    }
}

TEST_CASE("markedClassSize") {
    CHECK(markedClassSize({{2, 1, 1}, 2}) == 3);
    CHECK(markedClassSize({{1, 1, 1, 1}, 1}) == 1);
    CHECK(markedClassSize({{1, 1, 1, 1, 1, 1}, 1}) == 1);
    CHECK_THROWS_AS(markedClassSize({{2, 1, 1}, 3}), ValidationError);
    CHECK_THROWS_AS(markedClassSize({{1, 2}, 1}), ValidationError);

    BigInt total{0};
    for (auto const& c : enumerateMarkedClasses(4)) total += markedClassSize(c);
    CHECK(total == 24);
}

TEST_CASE("markedClassSize matches brute force") {
    for (int n = 1; n <= 6; ++n) {
        std::map<MarkedClass, BigInt> counts;
        for (auto const& p : allPermutations(n)) ++counts[markedClassOf(p, 1)];
        for (auto const& c : enumerateMarkedClasses(n)) {
            INFO(toString(c).c_str());
            CHECK(markedClassSize(c) == counts[c]);
        }
    }
    for (int n = 1; n <= 7; ++n) {
        BigInt total{0};
        for (auto const& c : enumerateMarkedClasses(n)) total += markedClassSize(c);
        CHECK(total == factorial(n));
    }
}
