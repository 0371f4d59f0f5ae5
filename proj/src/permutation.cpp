#include "pbt/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "pbt/partitions.hpp"

namespace pbt {

namespace {

void requireRange(int n, int i, char const* what) {
    if (i < 1 || i > n) {
        throw ValidationError(std::string(what) + " " + std::to_string(i) + " outside 1.." +
                              std::to_string(n));
    }
}

// Single digits unless some cycle uses separators or n > 9.
std::vector<int> parseCycleBody(std::string_view body, bool separated) {
    std::vector<int> labels;
    if (!separated) {
        for (char ch : body) {
            if (!std::isdigit(static_cast<unsigned char>(ch))) {
                throw ValidationError("unexpected character '" + std::string(1, ch) + "' in cycle");
            }
            labels.push_back(ch - '0');
        }
        return labels;
    }
    std::string token;
    auto flush = [&] {
        if (!token.empty()) {
            labels.push_back(std::stoi(token));
            token.clear();
        }
    };
    for (char ch : body) {
        if (ch == ' ' || ch == ',') {
            flush();
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            token.push_back(ch);
        } else {
            throw ValidationError("unexpected character '" + std::string(1, ch) + "' in cycle");
        }
    }
    flush();
    return labels;
}

}  // namespace

Permutation Permutation::identity(int n) {
    if (n < 1) throw ValidationError("permutation size must be at least 1");
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images));
}

Permutation Permutation::transposition(int n, int i, int j) {
    auto p = identity(n);
    requireRange(n, i, "port");
    requireRange(n, j, "port");
    std::swap(p.images_[static_cast<std::size_t>(i - 1)], p.images_[static_cast<std::size_t>(j - 1)]);
    return p;
}

Permutation Permutation::fromImages(std::vector<int> images) {
    int const n = static_cast<int>(images.size());
    if (n < 1) throw ValidationError("permutation size must be at least 1");
    std::vector<bool> seen(images.size(), false);
    for (int v : images) {
        requireRange(n, v, "image");
        if (seen[static_cast<std::size_t>(v - 1)]) {
            throw ValidationError("image " + std::to_string(v) + " repeated");
        }
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
    return Permutation(std::move(images));
}

Permutation Permutation::fromCycles(std::string_view text, int n) {
    std::vector<std::vector<int>> cycles;
    bool separated = n > 9;
    for (std::size_t open = text.find('('); open != std::string_view::npos; open = text.find('(', open + 1)) {
        auto const body = text.substr(open + 1, text.find(')', open) - open - 1);
        if (body.find_first_of(" ,") != std::string_view::npos) separated = true;
    }
    std::size_t pos = 0;
    while (pos < text.size()) {
        char const ch = text[pos];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++pos;
            continue;
        }
        if (ch != '(') throw ValidationError("expected '(' in cycle notation");
        auto const close = text.find(')', pos);
        if (close == std::string_view::npos) throw ValidationError("unterminated cycle");
        auto labels = parseCycleBody(text.substr(pos + 1, close - pos - 1), separated);
        if (labels.empty()) throw ValidationError("empty cycle");
        cycles.push_back(std::move(labels));
        pos = close + 1;
    }

    int maxLabel = 0;
    for (auto const& c : cycles) {
        for (int v : c) maxLabel = std::max(maxLabel, v);
    }
    if (n == 0) n = maxLabel;
    if (n < 1) throw ValidationError("cannot infer permutation size from empty text");

    auto p = identity(n);
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (auto const& c : cycles) {
        for (std::size_t k = 0; k < c.size(); ++k) {
            requireRange(n, c[k], "label");
            if (seen[static_cast<std::size_t>(c[k] - 1)]) {
                throw ValidationError("label " + std::to_string(c[k]) + " repeated");
            }
            seen[static_cast<std::size_t>(c[k] - 1)] = true;
            p.images_[static_cast<std::size_t>(c[k] - 1)] = c[(k + 1) % c.size()];
        }
    }
    return p;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
        inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
    }
    return Permutation(std::move(inv));
}

bool Permutation::isIdentity() const {
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i] != static_cast<int>(i) + 1) return false;
    }
    return true;
}

std::string Permutation::toCycles() const {
    bool const wide = size() > 9;
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (int start = 1; start <= size(); ++start) {
        if (seen[static_cast<std::size_t>(start - 1)]) continue;
        out.push_back('(');
        int cur = start;
        bool first = true;
        do {
            if (wide && !first) out.push_back(' ');
            out += std::to_string(cur);
            seen[static_cast<std::size_t>(cur - 1)] = true;
            cur = (*this)(cur);
            first = false;
        } while (cur != start);
        out.push_back(')');
    }
    return out;
}

std::vector<int> Permutation::cycleType() const {
    std::vector<int> lengths;
    std::vector<bool> seen(images_.size(), false);
    for (int start = 1; start <= size(); ++start) {
        if (seen[static_cast<std::size_t>(start - 1)]) continue;
        int len = 0;
        int cur = start;
        do {
            seen[static_cast<std::size_t>(cur - 1)] = true;
            cur = (*this)(cur);
            ++len;
        } while (cur != start);
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    return lengths;
}

int Permutation::cycleCount() const { return static_cast<int>(cycleType().size()); }

int Permutation::cycleLengthContaining(int j) const {
    requireRange(size(), j, "port");
    int len = 0;
    int cur = j;
    do {
        cur = (*this)(cur);
        ++len;
    } while (cur != j);
    return len;
}

Permutation compose(Permutation const& p, Permutation const& q) {
    if (p.size() != q.size()) {
        throw ValidationError("cannot compose permutations of sizes " + std::to_string(p.size()) +
                              " and " + std::to_string(q.size()));
    }
    std::vector<int> images(static_cast<std::size_t>(p.size()));
    for (int i = 1; i <= p.size(); ++i) images[static_cast<std::size_t>(i - 1)] = p(q(i));
    return Permutation::fromImages(std::move(images));
}

std::vector<Permutation> allPermutations(int n) {
    std::vector<Permutation> out;
    if (n < 1) throw ValidationError("permutation size must be at least 1");
    std::vector<int> current(static_cast<std::size_t>(n));
    std::iota(current.begin(), current.end(), 1);
    do {
        out.push_back(Permutation::fromImages(current));
    } while (std::next_permutation(current.begin(), current.end()));
    return out;
}

int MarkedClass::size() const { return std::accumulate(cycleType.begin(), cycleType.end(), 0); }

std::string toString(MarkedClass const& c) {
    std::string out;
    for (std::size_t i = 0; i < c.cycleType.size(); ++i) {
        if (i > 0) out.push_back(',');
        out += std::to_string(c.cycleType[i]);
    }
    return out + " " + std::to_string(c.markedLen);
}

MarkedClass markedClassOf(Permutation const& p, int j) {
    requireRange(p.size(), j, "marked port");
    // Relabel so the marked port is port 1.
    auto const swap = Permutation::transposition(p.size(), 1, j);
    auto const moved = swap * p * swap;
    return MarkedClass{moved.cycleType(), moved.cycleLengthContaining(1)};
}

std::vector<MarkedClass> enumerateMarkedClasses(int n) {
    if (n < 1) throw ValidationError("marked classes need at least one port");
    std::vector<MarkedClass> out;
    for (auto const& partition : enumeratePartitions(n)) {
        // Parts are non-increasing, so distinct sizes come out in decreasing order.
        int previous = 0;
        for (int part : partition) {
            if (part == previous) continue;
            out.push_back(MarkedClass{partition, part});
            previous = part;
        }
    }
    return out;
}

BigInt factorial(int n) {
    BigInt f{1};
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

BigInt markedClassSize(MarkedClass const& c) {
    int const n = c.size();
    if (n < 1 || !std::is_sorted(c.cycleType.begin(), c.cycleType.end(), std::greater<>()) ||
        c.cycleType.back() < 1) {
        throw ValidationError("inconsistent marked class: bad cycle type");
    }
    std::map<int, int> multiplicity;
    for (int k : c.cycleType) ++multiplicity[k];
    auto const marked = multiplicity.find(c.markedLen);
    if (marked == multiplicity.end()) {
        throw ValidationError("inconsistent marked class: marked length not a cycle length");
    }

    // n! / prod(k^m_k m_k!) permutations have this cycle type; the fraction
    // k m_k / n of them put port 1 in a cycle of length k.
    BigInt centralizer{1};
    for (auto const& [k, m] : multiplicity) {
        for (int i = 0; i < m; ++i) centralizer *= k;
        centralizer *= factorial(m);
    }
    BigInt const classSize = factorial(n) / centralizer;
    return classSize * (c.markedLen * marked->second) / n;
}

}  // namespace pbt
