#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pbt/dim_poly.hpp"
#include "pbt/permutation.hpp"
#include "pbt/types.hpp"

namespace pbt {

/// Normal form of a diagram: the port permutation [perm] followed (on the
/// left) by nothing, or by a single trailing cup-cap sigma_attach linking
/// subsystem 0 with port `attach`. As an operator this is U_perm * sigma_attach,
/// where U_perm carries the content of port i to port perm(i).
struct TermKey {
    Permutation perm;
    std::optional<int> attach;

    int ports() const { return perm.size(); }
    bool hasSigma() const { return attach.has_value(); }

    auto operator<=>(TermKey const&) const = default;
    bool operator==(TermKey const&) const = default;
};

/// Result of multiplying two normal forms: the new key and the number of
/// closed loops removed along the way (each worth a factor d).
struct KeyProduct {
    TermKey key;
    int loops = 0;
};

KeyProduct multiplyKeys(TermKey const& a, TermKey const& b);

/// Closed loops of the traced diagram; tr(key) = d^closedLoops(key).
int closedLoops(TermKey const& key);

TermKey adjointKey(TermKey const& key);

/// `coeff * d^dPower * [perm] * sigma_attach`.
struct DiagramTerm {
    Rational coeff{1};
    int dPower = 0;
    TermKey key;
};

DiagramTerm mulTerms(DiagramTerm const& a, DiagramTerm const& b);

/// Loop count L of the closed diagram; the trace is coeff * d^(dPower + L).
int traceTerm(DiagramTerm const& t);

std::string toString(TermKey const& key);

namespace detail {

inline bool scalarIsZero(DimPoly const& s) { return s.isZero(); }
template <typename Scalar>
bool scalarIsZero(Scalar const& s) {
    return s == Scalar(0);
}

inline void appendMonomials(std::ostream& os, DimPoly const& c, std::string const& suffix) {
    for (auto it = c.coefficients().rbegin(); it != c.coefficients().rend(); ++it) {
        os << it->second << " * d^" << it->first << " * " << suffix << '\n';
    }
}
template <typename Scalar>
void appendMonomials(std::ostream& os, Scalar const& c, std::string const& suffix) {
    os << c << " * d^0 * " << suffix << '\n';
}

}  // namespace detail

/// Finite linear combination of normal-form diagrams on a fixed number of
/// ports. `loopValue` is what one closed loop evaluates to: the symbol d for
/// DimPoly scalars, or a concrete dimension for numeric scalars.
template <typename Scalar>
class Element {
public:
    using Terms = std::map<TermKey, Scalar>;

    Element(int ports, Scalar loopValue) : ports_(ports), loop_(std::move(loopValue)) {
        if (ports < 1) throw ValidationError("an element needs at least one port");
    }

    int ports() const { return ports_; }
    Scalar const& loopValue() const { return loop_; }
    Terms const& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }

    Scalar coefficient(TermKey const& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    void accumulate(TermKey const& key, Scalar const& c) {
        if (key.ports() != ports_) throw ValidationError("term size does not match element");
        if (detail::scalarIsZero(c)) return;
        auto [it, inserted] = terms_.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (detail::scalarIsZero(it->second)) terms_.erase(it);
        }
    }

    Element& operator+=(Element const& other) {
        requireCompatible(other);
        for (auto const& [k, c] : other.terms_) accumulate(k, c);
        return *this;
    }

    Element& operator-=(Element const& other) {
        requireCompatible(other);
        for (auto const& [k, c] : other.terms_) accumulate(k, Scalar(0) - c);
        return *this;
    }

    Element& operator*=(Scalar const& s) {
        if (detail::scalarIsZero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, c] : terms_) c *= s;
        std::erase_if(terms_, [](auto const& entry) { return detail::scalarIsZero(entry.second); });
        return *this;
    }

    friend Element operator+(Element a, Element const& b) { return a += b; }
    friend Element operator-(Element a, Element const& b) { return a -= b; }
    friend Element operator*(Element a, Scalar const& s) { return a *= s; }
    friend Element operator*(Scalar const& s, Element a) { return a *= s; }

    friend Element operator*(Element const& a, Element const& b) {
        a.requireCompatible(b);
        Element out(a.ports_, a.loop_);
        for (auto const& [ka, ca] : a.terms_) {
            for (auto const& [kb, cb] : b.terms_) {
                auto product = multiplyKeys(ka, kb);
                Scalar c = ca * cb;
                for (int i = 0; i < product.loops; ++i) c *= a.loop_;
                out.accumulate(product.key, c);
            }
        }
        return out;
    }

    bool operator==(Element const& other) const {
        return ports_ == other.ports_ && terms_ == other.terms_;
    }

    Scalar trace() const {
        Scalar total(0);
        for (auto const& [k, c] : terms_) {
            Scalar value = c;
            int const loops = closedLoops(k);
            for (int i = 0; i < loops; ++i) value *= loop_;
            total += value;
        }
        return total;
    }

    Element adjoint() const {
        Element out(ports_, loop_);
        for (auto const& [k, c] : terms_) out.accumulate(adjointKey(k), c);
        return out;
    }

    /// One term per line: `coeff * d^k * [cycles] * sigma_j`, or `* 1` for a
    /// bare permutation.
    std::string toDebugString() const {
        std::ostringstream os;
        for (auto const& [k, c] : terms_) {
            std::string const suffix =
                "[" + k.perm.toCycles() + "] * " +
                (k.attach ? "sigma_" + std::to_string(*k.attach) : std::string("1"));
            detail::appendMonomials(os, c, suffix);
        }
        return os.str();
    }

    template <typename Fn>
    auto mapScalars(auto newLoop, Fn&& fn) const {
        using Out = decltype(fn(std::declval<Scalar const&>()));
        Element<Out> out(ports_, newLoop);
        for (auto const& [k, c] : terms_) out.accumulate(k, fn(c));
        return out;
    }

private:
    void requireCompatible(Element const& other) const {
        if (ports_ != other.ports_) {
            throw ValidationError("elements on " + std::to_string(ports_) + " and " +
                                  std::to_string(other.ports_) + " ports");
        }
    }

    int ports_;
    Scalar loop_;
    Terms terms_;
};

using SymbolicElement = Element<DimPoly>;
using RationalElement = Element<Rational>;

/// sigma_i on n ports, graph units (unnormalised maximally entangled pair).
SymbolicElement sigma(int i, int n);
SymbolicElement identityElement(int n);
SymbolicElement permutationElement(Permutation const& p);
SymbolicElement toElement(DiagramTerm const& t);

RationalElement evaluateAt(SymbolicElement const& x, Rational const& d);

template <typename Real>
Element<Real> toRealElement(RationalElement const& x) {
    return x.mapScalars(toReal<Real>(x.loopValue()), [](Rational const& c) { return toReal<Real>(c); });
}

/// Orbit label of a key under simultaneous relabelling of ports: the marked
/// class for [P] sigma_j, or the plain cycle type for a bare permutation.
struct ClassLabel {
    std::vector<int> cycleType;
    std::optional<int> markedLen;

    auto operator<=>(ClassLabel const&) const = default;
    bool operator==(ClassLabel const&) const = default;
};

ClassLabel classOf(TermKey const& key);

/// Every key of the given class on n ports.
std::vector<TermKey> classMembers(ClassLabel const& label, int n);

template <typename Scalar>
using ClassVector = std::map<ClassLabel, Scalar>;

/// Per-member coefficient of each class. Throws ValidationError if the
/// element is not invariant under port relabelling.
template <typename Scalar>
ClassVector<Scalar> symmetrizeToClasses(Element<Scalar> const& x);

template <typename Scalar>
Element<Scalar> expandClasses(ClassVector<Scalar> const& v, int n, Scalar loopValue) {
    Element<Scalar> out(n, loopValue);
    for (auto const& [label, c] : v) {
        for (auto const& key : classMembers(label, n)) out.accumulate(key, c);
    }
    return out;
}

template <typename Scalar>
ClassVector<Scalar> symmetrizeToClasses(Element<Scalar> const& x) {
    ClassVector<Scalar> v;
    for (auto const& [k, c] : x.terms()) {
        auto const label = classOf(k);
        auto [it, inserted] = v.try_emplace(label, c);
        if (!inserted && !(it->second == c)) {
            throw ValidationError("element is not symmetric: class " + toString(k) +
                                  " has unequal coefficients");
        }
    }
    if (!(expandClasses(v, x.ports(), x.loopValue()) == x)) {
        throw ValidationError("element is not symmetric: class members missing");
    }
    return v;
}

}  // namespace pbt
