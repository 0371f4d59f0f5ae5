#include "pbt/diagram_algebra.hpp"

#include <numeric>

namespace pbt {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) {
        while (parent_[static_cast<std::size_t>(x)] != x) {
            auto& p = parent_[static_cast<std::size_t>(x)];
            p = parent_[static_cast<std::size_t>(p)];
            x = p;
        }
        return x;
    }

    void join(int a, int b) { parent_[static_cast<std::size_t>(find(a))] = find(b); }

    int components() {
        int count = 0;
        for (int i = 0; i < static_cast<int>(parent_.size()); ++i) count += find(i) == i ? 1 : 0;
        return count;
    }

private:
    std::vector<int> parent_;
};

void requireSameSize(TermKey const& a, TermKey const& b) {
    if (a.ports() != b.ports()) {
        throw ValidationError("cannot multiply diagrams on " + std::to_string(a.ports()) + " and " +
                              std::to_string(b.ports()) + " ports");
    }
}

}  // namespace

KeyProduct multiplyKeys(TermKey const& a, TermKey const& b) {
    requireSameSize(a, b);
    int const n = a.ports();
    auto perm = a.perm * b.perm;
    if (!a.attach) return {TermKey{std::move(perm), b.attach}, 0};

    // sigma_m [Q] = [Q] sigma_{Q^-1(m)}
    int const moved = b.perm.inverse()(*a.attach);
    if (!b.attach) return {TermKey{std::move(perm), moved}, 0};

    int const j = *b.attach;
    if (moved == j) return {TermKey{std::move(perm), j}, 1};
    // sigma_m sigma_j = S_mj sigma_j for m != j
    return {TermKey{perm * Permutation::transposition(n, moved, j), j}, 0};
}

int closedLoops(TermKey const& key) {
    int const n = key.ports();
    if (!key.attach) return key.perm.cycleCount() + 1;

    // Endpoints: bottom 0..n, middle 0..n, top 0..n; the trace glues top i to bottom i.
    int const width = n + 1;
    auto bottom = [](int i) { return i; };
    auto middle = [width](int i) { return width + i; };
    DisjointSets wires(2 * width);
    auto top = [&](int i) { return bottom(i); };

    int const j = *key.attach;
    wires.join(bottom(0), bottom(j));  // cap
    wires.join(middle(0), middle(j));  // cup
    for (int i = 1; i <= n; ++i) {
        if (i != j) wires.join(middle(i), bottom(i));
    }
    wires.join(middle(0), top(0));
    for (int i = 1; i <= n; ++i) wires.join(middle(i), top(key.perm(i)));
    return wires.components();
}

TermKey adjointKey(TermKey const& key) {
    // ([P] sigma_j)^dagger = sigma_j [P^-1] = [P^-1] sigma_{P(j)}
    if (!key.attach) return TermKey{key.perm.inverse(), std::nullopt};
    return TermKey{key.perm.inverse(), key.perm(*key.attach)};
}

DiagramTerm mulTerms(DiagramTerm const& a, DiagramTerm const& b) {
    auto product = multiplyKeys(a.key, b.key);
    return DiagramTerm{a.coeff * b.coeff, a.dPower + b.dPower + product.loops, std::move(product.key)};
}

int traceTerm(DiagramTerm const& t) { return closedLoops(t.key); }

std::string toString(TermKey const& key) {
    return "[" + key.perm.toCycles() + "]" + (key.attach ? "sigma_" + std::to_string(*key.attach) : "");
}

SymbolicElement sigma(int i, int n) {
    if (i < 1 || i > n) {
        throw ValidationError("sigma index " + std::to_string(i) + " outside 1.." + std::to_string(n));
    }
    SymbolicElement x(n, DimPoly::dim());
    x.accumulate(TermKey{Permutation::identity(n), i}, DimPoly{1});
    return x;
}

SymbolicElement identityElement(int n) { return permutationElement(Permutation::identity(n)); }

SymbolicElement permutationElement(Permutation const& p) {
    SymbolicElement x(p.size(), DimPoly::dim());
    x.accumulate(TermKey{p, std::nullopt}, DimPoly{1});
    return x;
}

SymbolicElement toElement(DiagramTerm const& t) {
    SymbolicElement x(t.key.ports(), DimPoly::dim());
    x.accumulate(t.key, DimPoly::monomial(t.coeff, t.dPower));
    return x;
}

RationalElement evaluateAt(SymbolicElement const& x, Rational const& d) {
    return x.mapScalars(d, [&d](DimPoly const& c) { return c.evaluate(d); });
}

ClassLabel classOf(TermKey const& key) {
    if (!key.attach) return ClassLabel{key.perm.cycleType(), std::nullopt};
    auto marked = markedClassOf(key.perm, *key.attach);
    return ClassLabel{std::move(marked.cycleType), marked.markedLen};
}

std::vector<TermKey> classMembers(ClassLabel const& label, int n) {
    std::vector<TermKey> members;
    for (auto const& p : allPermutations(n)) {
        if (p.cycleType() != label.cycleType) continue;
        if (!label.markedLen) {
            members.push_back(TermKey{p, std::nullopt});
            continue;
        }
        for (int j = 1; j <= n; ++j) {
            if (p.cycleLengthContaining(j) == *label.markedLen) members.push_back(TermKey{p, j});
        }
    }
    return members;
}

}  // namespace pbt
