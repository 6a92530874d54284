#pragma once

#include <compare>
#include <string>
#include <vector>

#include "tsrd/graph.hpp"

namespace tsrd {

// Total assignment of non-negative integer labels to the vertices of a
// graph of matching order. B0/B1/B2 are the vertices labeled 0, 1, >= 2.
class Labeling {
public:
    explicit Labeling(std::vector<int> labels);

    int order() const { return static_cast<int>(labels_.size()); }
    int operator[](int v) const { return labels_[v]; }
    const std::vector<int>& labels() const { return labels_; }

    int weight() const;
    std::vector<int> b0() const;
    std::vector<int> b1() const;
    std::vector<int> b2() const;

    bool operator==(const Labeling&) const = default;
    auto operator<=>(const Labeling& other) const { return labels_ <=> other.labels_; }

private:
    std::vector<int> labels_;
};

struct Violation {
    enum class Kind { UnguardedZero, WeakDefender, IsolatedPositive, LabelOverCap };

    Kind kind;
    int vertex;         // offending vertex
    int defender = -1;  // WeakDefender: B2 neighbor with the highest label
    int required = 0;   // WeakDefender: label the defender would need; LabelOverCap: the cap
    int actual = 0;     // WeakDefender / LabelOverCap: the actual label

    std::string describe() const;
    bool operator==(const Violation&) const = default;
};

struct Verdict {
    bool valid = true;
    std::vector<Violation> violations;
};

// Codomain cap for strong Roman labelings.
int strong_label_cap(const Graph& g);  // = ceil(maxdeg/2) + 1

// Largest label a solver ever needs on v; a vertex defends at most deg(v)
// zeros, so labels above 1 + ceil(deg(v)/2) are dominated.
int vertex_label_cap(const Graph& g, int v);

Verdict validate_rd(const Graph& g, const Labeling& f);
Verdict validate_trd(const Graph& g, const Labeling& f);
Verdict validate_strd(const Graph& g, const Labeling& f);
Verdict validate_tstrd(const Graph& g, const Labeling& f);

}  // namespace tsrd
