#include "tsrd/graph.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <queue>
#include <unordered_map>

namespace tsrd {

Graph::Graph(int order, const std::vector<VertexPair>& edges) : order_(order) {
    if (order < 1 || order > kMaxOrder)
        throw Error(ErrorCode::VertexOutOfRange,
                    "order must be between 1 and " + std::to_string(kMaxOrder));
    adj_.resize(order);
    masks_.assign(order, 0);
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || u >= order || v < 0 || v >= order)
            throw Error(ErrorCode::VertexOutOfRange,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v)
            throw Error(ErrorCode::LoopEdge, "vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if ((masks_[u] >> v) & 1u)
            throw Error(ErrorCode::DuplicateEdge,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        masks_[u] |= 1ull << v;
        masks_[v] |= 1ull << u;
        edges_.push_back({u, v});
    }
    std::sort(edges_.begin(), edges_.end());
    for (int v = 0; v < order; ++v) {
        for (int u = 0; u < order; ++u)
            if ((masks_[v] >> u) & 1u) adj_[v].push_back(u);
    }
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < order_; ++v) d = std::max(d, degree(v));
    return d;
}

int Graph::min_degree() const {
    int d = order_;
    for (int v = 0; v < order_; ++v) d = std::min(d, degree(v));
    return d;
}

namespace {

std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(g.order(), -1);
    std::queue<int> queue;
    dist[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop();
        for (int w : g.neighbors(u)) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push(w);
            }
        }
    }
    return dist;
}

}  // namespace

bool is_connected(const Graph& g) {
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

bool has_isolated_vertex(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) return true;
    return false;
}

std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<std::vector<int>> result;
    std::vector<bool> seen(g.order(), false);
    for (int s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::queue<int> queue;
        seen[s] = true;
        queue.push(s);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop();
            comp.push_back(u);
            for (int w : g.neighbors(u)) {
                if (!seen[w]) {
                    seen[w] = true;
                    queue.push(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        result.push_back(std::move(comp));
    }
    return result;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> index(g.order(), -1);
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i) index[vertices[i]] = i;
    std::vector<VertexPair> edges;
    for (auto [u, v] : g.edges())
        if (index[u] >= 0 && index[v] >= 0) edges.push_back({index[u], index[v]});
    return Graph(static_cast<int>(vertices.size()), edges);
}

Graph complement(const Graph& g) {
    std::vector<VertexPair> edges;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) edges.push_back({u, v});
    return Graph(g.order(), edges);
}

std::vector<std::vector<std::optional<int>>> distance_matrix(const Graph& g) {
    int n = g.order();
    std::vector<std::vector<std::optional<int>>> matrix(n, std::vector<std::optional<int>>(n));
    for (int s = 0; s < n; ++s) {
        auto dist = bfs_distances(g, s);
        for (int v = 0; v < n; ++v)
            if (dist[v] >= 0) matrix[s][v] = dist[v];
    }
    return matrix;
}

Girth girth(const Graph& g) {
    // Per-vertex BFS shortest-cycle scan: a non-tree edge (u,w) seen from
    // source s witnesses a cycle of length dist[u]+dist[w]+1; the minimum
    // over all sources is exact.
    int n = g.order();
    int best = n + 1;
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(n, -1), parent(n, -1);
        std::queue<int> queue;
        dist[s] = 0;
        queue.push(s);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop();
            for (int w : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push(w);
                } else if (w != parent[u]) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    return best > n ? Girth::unbounded() : Girth::finite(best);
}

namespace {

struct MatchingSearch {
    const Graph& g;
    std::unordered_map<std::uint64_t, int> memo;

    int solve(std::uint64_t free) {
        int v = -1;
        for (int u = 0; u < g.order(); ++u) {
            if (((free >> u) & 1u) && (g.neighbor_mask(u) & free)) {
                v = u;
                break;
            }
        }
        if (v < 0) return 0;
        auto it = memo.find(free);
        if (it != memo.end()) return it->second;
        int best = solve(free & ~(1ull << v));  // leave v unmatched
        for (int w : g.neighbors(v)) {
            if ((free >> w) & 1u)
                best = std::max(best, 1 + solve(free & ~(1ull << v) & ~(1ull << w)));
        }
        memo[free] = best;
        return best;
    }
};

}  // namespace

int matching_number(const Graph& g) {
    std::uint64_t all = g.order() == 64 ? ~0ull : (1ull << g.order()) - 1;
    MatchingSearch search{g, {}};
    return search.solve(all);
}

StructuralProfile profile(const Graph& g) {
    StructuralProfile p;
    p.max_degree = g.max_degree();
    p.min_degree = g.min_degree();
    p.girth = girth(g);
    p.matching_number = matching_number(g);
    p.is_connected = is_connected(g);
    p.has_isolated_vertex = has_isolated_vertex(g);
    p.is_tree = p.is_connected && g.size() == g.order() - 1;
    if (p.is_connected) {
        int diam = 0;
        for (int s = 0; s < g.order(); ++s) {
            auto dist = bfs_distances(g, s);
            diam = std::max(diam, *std::max_element(dist.begin(), dist.end()));
        }
        p.diameter = diam;
    }
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1) p.leaves.push_back(v);
    for (int v = 0; v < g.order(); ++v) {
        for (int w : g.neighbors(v)) {
            if (g.degree(w) == 1) {
                p.support_vertices.push_back(v);
                break;
            }
        }
    }
    return p;
}

namespace {

bool iso_backtrack(const Graph& a, const Graph& b, std::vector<int>& map, std::vector<bool>& used,
                   int depth) {
    int n = a.order();
    if (depth == n) return true;
    for (int img = 0; img < n; ++img) {
        if (used[img] || a.degree(depth) != b.degree(img)) continue;
        bool ok = true;
        for (int j = 0; j < depth && ok; ++j)
            if (a.adjacent(depth, j) != b.adjacent(map[j], img)) ok = false;
        if (!ok) continue;
        map[depth] = img;
        used[img] = true;
        if (iso_backtrack(a, b, map, used, depth + 1)) return true;
        used[img] = false;
    }
    return false;
}

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.order(); ++v) da.push_back(a.degree(v));
    for (int v = 0; v < b.order(); ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    std::vector<int> map(a.order(), -1);
    std::vector<bool> used(a.order(), false);
    return iso_backtrack(a, b, map, used, 0);
}

namespace {

// Minimizes the lower-triangle adjacency bitstring over all permutations,
// pruning branches whose emitted prefix already exceeds the best key.
struct CanonicalSearch {
    const Graph& g;
    int n;
    int total_bits;
    std::uint64_t best;
    std::array<int, 8> perm{};
    std::array<bool, 8> used{};

    void dfs(int depth, std::uint64_t partial, int bits) {
        if (depth == n) {
            if (partial < best) best = partial;
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            std::uint64_t row = 0;
            for (int j = 0; j < depth; ++j) row = (row << 1) | (g.adjacent(v, perm[j]) ? 1u : 0u);
            std::uint64_t next = (partial << depth) | row;
            int next_bits = bits + depth;
            if (next > (best >> (total_bits - next_bits))) continue;
            perm[depth] = v;
            used[v] = true;
            dfs(depth + 1, next, next_bits);
            used[v] = false;
        }
    }
};

}  // namespace

std::uint64_t canonical_key(const Graph& g) {
    int n = g.order();
    if (n > 8) throw Error(ErrorCode::InstanceTooLarge, "canonical_key requires order <= 8");
    int total_bits = n * (n - 1) / 2;
    CanonicalSearch search{g, n, total_bits, total_bits ? (1ull << total_bits) - 1 : 0};
    search.dfs(0, 0, 0);
    // Tag with the order so keys of different orders never collide.
    return (static_cast<std::uint64_t>(n) << 56) | search.best;
}

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::LoopEdge: return "LoopEdge";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
        case ErrorCode::SizeMismatch: return "SizeMismatch";
        case ErrorCode::InvalidLabel: return "InvalidLabel";
        case ErrorCode::IsolatedVertexInGraph: return "IsolatedVertexInGraph";
        case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
        case ErrorCode::InvalidFamilyParams: return "InvalidFamilyParams";
        case ErrorCode::NoClosedForm: return "NoClosedForm";
        case ErrorCode::StarInput: return "StarInput";
        case ErrorCode::TooSmall: return "TooSmall";
        case ErrorCode::WrongDiameter: return "WrongDiameter";
        case ErrorCode::MinDegreeTooSmall: return "MinDegreeTooSmall";
        case ErrorCode::AcyclicInput: return "AcyclicInput";
        case ErrorCode::GirthTooSmall: return "GirthTooSmall";
        case ErrorCode::NotDominatingSet: return "NotDominatingSet";
        case ErrorCode::NotTotalDominatingSet: return "NotTotalDominatingSet";
        case ErrorCode::NotATree: return "NotATree";
        case ErrorCode::CertificateFailure: return "CertificateFailure";
        case ErrorCode::MalformedGraph6: return "MalformedGraph6";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Error";
}

}  // namespace tsrd
