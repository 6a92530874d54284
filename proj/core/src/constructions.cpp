#include "tsrd/constructions.hpp"

#include <algorithm>
#include <bit>
#include <queue>

#include "tsrd/solvers.hpp"
#include "tsrd/verify.hpp"

namespace tsrd {

namespace {

CertifiedLabeling certify(const Graph& g, std::vector<int> labels, int claimed, TheoremId theorem) {
    Labeling f(std::move(labels));
    auto verdict = validate_tstrd(g, f);
    if (!verdict.valid)
        throw Error(ErrorCode::CertificateFailure,
                    std::string(to_string(theorem)) + " construction produced an invalid labeling: " +
                        verdict.violations.front().describe());
    if (f.weight() > claimed)
        throw Error(ErrorCode::CertificateFailure,
                    std::string(to_string(theorem)) + " construction weight " +
                        std::to_string(f.weight()) + " exceeds claimed bound " +
                        std::to_string(claimed));
    return CertifiedLabeling{std::move(f), claimed, theorem};
}

int lowest_max_degree_vertex(const Graph& g) {
    int best = 0;
    for (int v = 1; v < g.order(); ++v)
        if (g.degree(v) > g.degree(best)) best = v;
    return best;
}

int lowest_min_degree_vertex(const Graph& g) {
    int best = 0;
    for (int v = 1; v < g.order(); ++v)
        if (g.degree(v) < g.degree(best)) best = v;
    return best;
}

// Exact minimum subset of N(v) covering S, by ascending size then bitmask.
std::vector<int> minimum_cover_from_neighborhood(const Graph& g, int v,
                                                 const std::vector<int>& targets) {
    const auto& candidates = g.neighbors(v);
    int k = static_cast<int>(candidates.size());
    for (int size = 1; size <= k; ++size) {
        for (std::uint64_t mask = 0; mask < (1ull << k); ++mask) {
            if (std::popcount(mask) != size) continue;
            bool covers = true;
            for (int s : targets) {
                bool hit = false;
                for (int i = 0; i < k && !hit; ++i)
                    if (((mask >> i) & 1u) && g.adjacent(s, candidates[i])) hit = true;
                if (!hit) {
                    covers = false;
                    break;
                }
            }
            if (covers) {
                std::vector<int> result;
                for (int i = 0; i < k; ++i)
                    if ((mask >> i) & 1u) result.push_back(candidates[i]);
                return result;
            }
        }
    }
    throw Error(ErrorCode::CertificateFailure, "no neighborhood cover exists");
}

struct MatchingBoundPlan {
    int proof_case;  // 0: X empty, 1: S empty, 2..5: the four cases
    std::vector<int> labels;
};

MatchingBoundPlan plan_matching_bound(const Graph& g) {
    int n = g.order();
    int v = lowest_max_degree_vertex(g);
    int maxdeg = g.degree(v);
    int strong = ceil_half(maxdeg - 1) + 1;

    std::vector<int> x_set;  // V minus N[v]
    for (int u = 0; u < n; ++u)
        if (u != v && !g.adjacent(u, v)) x_set.push_back(u);

    std::vector<int> labels(n, 0);
    if (x_set.empty()) {
        labels[v] = strong;
        labels[g.neighbors(v).front()] = 1;
        return {0, labels};
    }

    std::vector<bool> in_x(n, false);
    for (int u : x_set) in_x[u] = true;
    std::vector<int> s_set;  // isolated vertices of the subgraph induced by X
    for (int u : x_set) {
        bool isolated = true;
        for (int w : g.neighbors(u))
            if (in_x[w]) {
                isolated = false;
                break;
            }
        if (isolated) s_set.push_back(u);
    }

    if (s_set.empty()) {
        labels[v] = strong;
        labels[g.neighbors(v).front()] = 1;
        for (int u : x_set) labels[u] = 1;
        return {1, labels};
    }

    auto s_prime = minimum_cover_from_neighborhood(g, v, s_set);
    bool s_prime_full = static_cast<int>(s_prime.size()) == maxdeg;
    bool s_is_x = s_set.size() == x_set.size();
    std::vector<bool> in_s(n, false);
    for (int u : s_set) in_s[u] = true;

    for (int u : s_prime) labels[u] = strong;
    if (s_prime_full && s_is_x) {
        labels[v] = 1;
        return {2, labels};
    }
    if (s_prime_full && !s_is_x) {
        labels[v] = 1;
        for (int u : x_set)
            if (!in_s[u]) labels[u] = 1;
        return {3, labels};
    }
    int center = 1 + ceil_half(maxdeg - static_cast<int>(s_prime.size()));
    if (!s_prime_full && s_is_x) {
        labels[v] = center;
        return {4, labels};
    }
    labels[v] = center;
    for (int u : x_set)
        if (!in_s[u]) labels[u] = 1;
    return {5, labels};
}

void require_matching_bound_preconditions(const Graph& g) {
    if (has_isolated_vertex(g))
        throw Error(ErrorCode::IsolatedVertexInGraph, "matching bound needs min degree >= 1");
    if (g.order() < 4) throw Error(ErrorCode::TooSmall, "matching bound needs order >= 4");
    if (is_star_graph(g)) throw Error(ErrorCode::StarInput, "matching bound excludes stars");
    // With maxdeg 1 (disjoint edges) the claimed bound drops to n-1 while
    // the exact value is n; the bound is unachievable there.
    if (g.max_degree() < 2)
        throw Error(ErrorCode::TooSmall, "matching bound needs max degree >= 2");
}

}  // namespace

int matching_bound_case(const Graph& g) {
    require_matching_bound_preconditions(g);
    return plan_matching_bound(g).proof_case;
}

CertifiedLabeling construct_matching_bound(const Graph& g) {
    require_matching_bound_preconditions(g);
    int claimed = g.order() - g.max_degree() + matching_number(g) * ceil_half(g.max_degree() - 1);
    return certify(g, plan_matching_bound(g).labels, claimed, TheoremId::THM_S);
}

CertifiedLabeling construct_mindeg_bound(const Graph& g) {
    if (!is_connected(g) || g.order() < 2)
        throw Error(ErrorCode::TooSmall, "min-degree bound needs a connected graph of order >= 2");
    int n = g.order();
    int v = lowest_min_degree_vertex(g);
    int mindeg = g.degree(v);
    std::vector<int> labels(n, 0);
    labels[v] = ceil_half(mindeg - 1) + 1;
    labels[g.neighbors(v).front()] = 1;
    for (int u = 0; u < n; ++u)
        if (u != v && !g.adjacent(u, v)) labels[u] = 1;
    int claimed = n - (mindeg - 1) / 2;
    return certify(g, std::move(labels), claimed, TheoremId::PROP_MINDEG);
}

CertifiedLabeling construct_diam2_bound(const Graph& g) {
    auto p = profile(g);
    if (!p.diameter || *p.diameter != 2)
        throw Error(ErrorCode::WrongDiameter, "construction needs diameter exactly 2");
    int v = lowest_min_degree_vertex(g);
    std::vector<int> labels(g.order(), 0);
    labels[v] = 1;
    for (int u : g.neighbors(v)) labels[u] = 1 + ceil_half(p.max_degree - 1);
    int claimed = p.min_degree * (1 + ceil_half(p.max_degree - 1)) + 1;
    return certify(g, std::move(labels), claimed, TheoremId::PROP_DIAM2);
}

namespace {

// Lexicographic BFS parents: neighbors are scanned in ascending id order,
// so the parent chain from any target is the first-found shortest path.
std::pair<std::vector<int>, std::vector<int>> bfs_tree(const Graph& g, int source) {
    std::vector<int> dist(g.order(), -1), parent(g.order(), -1);
    std::queue<int> queue;
    dist[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop();
        for (int w : g.neighbors(u)) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                parent[w] = u;
                queue.push(w);
            }
        }
    }
    return {dist, parent};
}

std::vector<int> diametral_path(const Graph& g) {
    int n = g.order();
    int diam = -1, source = 0;
    for (int s = 0; s < n; ++s) {
        auto [dist, parent] = bfs_tree(g, s);
        int ecc = *std::max_element(dist.begin(), dist.end());
        if (ecc > diam) {
            diam = ecc;
            source = s;
        }
    }
    auto [dist, parent] = bfs_tree(g, source);
    int target = 0;
    while (dist[target] != diam) ++target;
    std::vector<int> path;
    for (int u = target; u != -1; u = parent[u]) path.push_back(u);
    std::reverse(path.begin(), path.end());
    return path;
}

// Shortest cycle as an ordered vertex list: for each edge (a,b) in order,
// the shortest a-b path avoiding that edge plus the edge itself.
std::vector<int> shortest_cycle(const Graph& g) {
    int n = g.order();
    int best_len = n + 1;
    std::vector<int> best;
    for (auto [a, b] : g.edges()) {
        std::vector<int> dist(n, -1), parent(n, -1);
        std::queue<int> queue;
        dist[a] = 0;
        queue.push(a);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop();
            for (int w : g.neighbors(u)) {
                if (u == a && w == b) continue;
                if (u == b && w == a) continue;
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push(w);
                }
            }
        }
        if (dist[b] < 0 || dist[b] + 1 >= best_len) continue;
        best_len = dist[b] + 1;
        best.clear();
        for (int u = b; u != -1; u = parent[u]) best.push_back(u);
    }
    return best;
}

// Copies an optimal StRD labeling of the subgraph induced by `spine` onto
// those vertices and labels everything else 1.
std::vector<int> spine_labels(const Graph& g, const std::vector<int>& spine) {
    Graph sub = induced_subgraph(g, spine);
    Labeling opt = optimal_strd_labeling(sub);
    std::vector<int> labels(g.order(), 1);
    for (int i = 0; i < static_cast<int>(spine.size()); ++i) labels[spine[i]] = opt[i];
    return labels;
}

}  // namespace

CertifiedLabeling construct_diametral_path_bound(const Graph& g) {
    if (!is_connected(g)) throw Error(ErrorCode::TooSmall, "construction needs a connected graph");
    if (g.min_degree() < 3)
        throw Error(ErrorCode::MinDegreeTooSmall, "diametral path bound needs min degree >= 3");
    auto path = diametral_path(g);
    int diam = static_cast<int>(path.size()) - 1;
    int claimed = g.order() - (diam + 1) / 3;
    return certify(g, spine_labels(g, path), claimed, TheoremId::PROP_DIAMPATH);
}

CertifiedLabeling construct_girth_cycle_bound(const Graph& g) {
    if (!is_connected(g)) throw Error(ErrorCode::TooSmall, "construction needs a connected graph");
    if (g.min_degree() < 3)
        throw Error(ErrorCode::MinDegreeTooSmall, "girth bound needs min degree >= 3");
    auto cycle = shortest_cycle(g);
    if (cycle.empty()) throw Error(ErrorCode::AcyclicInput, "graph has no cycle");
    if (cycle.size() < 4) throw Error(ErrorCode::GirthTooSmall, "girth bound needs girth >= 4");
    int claimed = g.order() - static_cast<int>(cycle.size()) / 3;
    return certify(g, spine_labels(g, cycle), claimed, TheoremId::PROP_GIRTH);
}

CertifiedLabeling construct_domset_bound(const Graph& g,
                                         const std::optional<std::vector<int>>& s) {
    if (has_isolated_vertex(g))
        throw Error(ErrorCode::IsolatedVertexInGraph, "domination bound needs min degree >= 1");
    std::vector<int> domset = s ? *s : minimum_dominating_set(g);
    if (s && !is_dominating_set(g, domset))
        throw Error(ErrorCode::NotDominatingSet, "given set does not dominate the graph");
    std::vector<bool> in_set(g.order(), false);
    for (int v : domset) in_set[v] = true;
    int strong = ceil_half(g.max_degree() - 1) + 1;
    std::vector<int> labels(g.order(), 0);
    for (int v : domset) labels[v] = strong;
    for (int v : domset) {
        bool has_set_neighbor = false;
        for (int w : g.neighbors(v))
            if (in_set[w]) {
                has_set_neighbor = true;
                break;
            }
        if (!has_set_neighbor) {
            int helper = g.neighbors(v).front();
            if (labels[helper] == 0) labels[helper] = 1;
        }
    }
    int claimed = (ceil_half(g.max_degree() - 1) + 2) * static_cast<int>(domset.size());
    return certify(g, std::move(labels), claimed, TheoremId::THM_THREE);
}

CertifiedLabeling construct_total_domset_bound(const Graph& g,
                                               const std::optional<std::vector<int>>& s) {
    if (has_isolated_vertex(g))
        throw Error(ErrorCode::IsolatedVertexInGraph, "total domination bound needs min degree >= 1");
    std::vector<int> domset = s ? *s : minimum_total_dominating_set(g);
    if (s && !is_total_dominating_set(g, domset))
        throw Error(ErrorCode::NotTotalDominatingSet, "given set is not total dominating");
    std::vector<int> labels(g.order(), 0);
    for (int v : domset) labels[v] = 1 + ceil_half(g.max_degree() - 1);
    int claimed = ceil_div(g.max_degree() + 1, 2) * static_cast<int>(domset.size());
    return certify(g, std::move(labels), claimed, TheoremId::OBS1);
}

}  // namespace tsrd
