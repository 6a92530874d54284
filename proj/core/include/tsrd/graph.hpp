#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tsrd/errors.hpp"

namespace tsrd {

using VertexPair = std::pair<int, int>;

// Immutable simple undirected graph on vertices 0..order-1.
// Order is capped at 62 so adjacency fits a 64-bit mask and every graph
// has a short-format graph6 encoding.
class Graph {
public:
    static constexpr int kMaxOrder = 62;

    Graph(int order, const std::vector<VertexPair>& edges);

    int order() const { return order_; }
    int size() const { return static_cast<int>(edges_.size()); }

    bool adjacent(int u, int v) const { return (masks_[u] >> v) & 1u; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    std::uint64_t neighbor_mask(int v) const { return masks_[v]; }

    // Edges normalized u < v, sorted lexicographically.
    const std::vector<VertexPair>& edges() const { return edges_; }

    int max_degree() const;
    int min_degree() const;

    bool operator==(const Graph& other) const {
        return order_ == other.order_ && edges_ == other.edges_;
    }

private:
    int order_;
    std::vector<VertexPair> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint64_t> masks_;
};

// Length of a shortest cycle, with an explicit unbounded state for acyclic
// graphs (never a sentinel integer).
class Girth {
public:
    static Girth finite(int length) { return Girth(length); }
    static Girth unbounded() { return Girth(); }

    bool is_unbounded() const { return !length_.has_value(); }
    int length() const { return length_.value(); }

    // Unbounded girth compares as larger than every finite value.
    bool at_least(int k) const { return is_unbounded() || *length_ >= k; }

    bool operator==(const Girth&) const = default;

private:
    Girth() = default;
    explicit Girth(int length) : length_(length) {}
    std::optional<int> length_;
};

struct StructuralProfile {
    int max_degree = 0;
    int min_degree = 0;
    std::optional<int> diameter;  // empty when disconnected
    Girth girth = Girth::unbounded();
    int matching_number = 0;
    std::vector<int> leaves;
    std::vector<int> support_vertices;
    bool is_connected = false;
    bool is_tree = false;
    bool has_isolated_vertex = false;
};

StructuralProfile profile(const Graph& g);

Graph complement(const Graph& g);

// Symmetric hop-distance matrix; entries across components are empty.
std::vector<std::vector<std::optional<int>>> distance_matrix(const Graph& g);

Girth girth(const Graph& g);

// Exact maximum matching by include/exclude branching on the lowest free
// vertex, memoized on the set of covered vertices.
int matching_number(const Graph& g);

bool is_connected(const Graph& g);
bool has_isolated_vertex(const Graph& g);

// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<int>> components(const Graph& g);

// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

// Exact isomorphism test (backtracking over degree classes); desk scale.
bool isomorphic(const Graph& a, const Graph& b);

// Minimum adjacency bitstring over all vertex permutations, packed into a
// 64-bit key. Exact; requires order <= 8.
std::uint64_t canonical_key(const Graph& g);

inline int ceil_half(int k) { return (k + 1) / 2; }
inline int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace tsrd
