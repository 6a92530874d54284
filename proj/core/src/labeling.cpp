#include "tsrd/labeling.hpp"

#include <algorithm>
#include <numeric>

namespace tsrd {

Labeling::Labeling(std::vector<int> labels) : labels_(std::move(labels)) {
    for (int value : labels_)
        if (value < 0) throw Error(ErrorCode::InvalidLabel, "labels must be non-negative");
}

int Labeling::weight() const { return std::accumulate(labels_.begin(), labels_.end(), 0); }

std::vector<int> Labeling::b0() const {
    std::vector<int> out;
    for (int v = 0; v < order(); ++v)
        if (labels_[v] == 0) out.push_back(v);
    return out;
}

std::vector<int> Labeling::b1() const {
    std::vector<int> out;
    for (int v = 0; v < order(); ++v)
        if (labels_[v] == 1) out.push_back(v);
    return out;
}

std::vector<int> Labeling::b2() const {
    std::vector<int> out;
    for (int v = 0; v < order(); ++v)
        if (labels_[v] >= 2) out.push_back(v);
    return out;
}

std::string Violation::describe() const {
    switch (kind) {
        case Kind::UnguardedZero:
            return "zero vertex " + std::to_string(vertex) + " has no defender";
        case Kind::WeakDefender:
            return "zero vertex " + std::to_string(vertex) + ": best defender " +
                   std::to_string(defender) + " has label " + std::to_string(actual) +
                   " but needs " + std::to_string(required);
        case Kind::IsolatedPositive:
            return "positive vertex " + std::to_string(vertex) + " has no positive neighbor";
        case Kind::LabelOverCap:
            return "vertex " + std::to_string(vertex) + " has label " + std::to_string(actual) +
                   " above cap " + std::to_string(required);
    }
    return {};
}

int strong_label_cap(const Graph& g) { return ceil_half(g.max_degree()) + 1; }

int vertex_label_cap(const Graph& g, int v) { return 1 + ceil_half(g.degree(v)); }

namespace {

void require_same_order(const Graph& g, const Labeling& f) {
    if (f.order() != g.order())
        throw Error(ErrorCode::SizeMismatch, "labeling has " + std::to_string(f.order()) +
                                                 " labels for a graph of order " +
                                                 std::to_string(g.order()));
}

void check_caps(const Graph& g, const Labeling& f, int cap, std::vector<Violation>& out) {
    for (int v = 0; v < g.order(); ++v) {
        if (f[v] > cap)
            out.push_back({Violation::Kind::LabelOverCap, v, -1, cap, f[v]});
    }
}

void check_totality(const Graph& g, const Labeling& f, std::vector<Violation>& out) {
    for (int v = 0; v < g.order(); ++v) {
        if (f[v] == 0) continue;
        bool ok = false;
        for (int w : g.neighbors(v)) {
            if (f[w] > 0) {
                ok = true;
                break;
            }
        }
        if (!ok) out.push_back({Violation::Kind::IsolatedPositive, v});
    }
}

Verdict finish(std::vector<Violation> violations) {
    return Verdict{violations.empty(), std::move(violations)};
}

Verdict validate_roman(const Graph& g, const Labeling& f, bool total) {
    require_same_order(g, f);
    std::vector<Violation> violations;
    check_caps(g, f, 2, violations);
    for (int v = 0; v < g.order(); ++v) {
        if (f[v] != 0) continue;
        bool ok = false;
        for (int w : g.neighbors(v)) {
            if (f[w] == 2) {
                ok = true;
                break;
            }
        }
        if (!ok) violations.push_back({Violation::Kind::UnguardedZero, v});
    }
    if (total) check_totality(g, f, violations);
    return finish(std::move(violations));
}

Verdict validate_strong(const Graph& g, const Labeling& f, bool total) {
    require_same_order(g, f);
    if (total && has_isolated_vertex(g))
        throw Error(ErrorCode::IsolatedVertexInGraph, "no total labeling exists");
    std::vector<Violation> violations;
    check_caps(g, f, strong_label_cap(g), violations);

    std::vector<int> zero_neighbors(g.order(), 0);
    for (int v = 0; v < g.order(); ++v)
        for (int w : g.neighbors(v))
            if (f[w] == 0) ++zero_neighbors[v];

    for (int v = 0; v < g.order(); ++v) {
        if (f[v] != 0) continue;
        bool defended = false;
        int best = -1;
        for (int w : g.neighbors(v)) {
            if (f[w] < 2) continue;
            if (f[w] >= 1 + ceil_half(zero_neighbors[w])) {
                defended = true;
                break;
            }
            if (best < 0 || f[w] > f[best]) best = w;
        }
        if (defended) continue;
        if (best < 0) {
            violations.push_back({Violation::Kind::UnguardedZero, v});
        } else {
            violations.push_back({Violation::Kind::WeakDefender, v, best,
                                  1 + ceil_half(zero_neighbors[best]), f[best]});
        }
    }
    if (total) check_totality(g, f, violations);
    return finish(std::move(violations));
}

}  // namespace

Verdict validate_rd(const Graph& g, const Labeling& f) { return validate_roman(g, f, false); }

Verdict validate_trd(const Graph& g, const Labeling& f) { return validate_roman(g, f, true); }

Verdict validate_strd(const Graph& g, const Labeling& f) { return validate_strong(g, f, false); }

Verdict validate_tstrd(const Graph& g, const Labeling& f) { return validate_strong(g, f, true); }

}  // namespace tsrd
