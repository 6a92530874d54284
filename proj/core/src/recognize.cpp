#include <algorithm>

#include "tsrd/families.hpp"
#include "tsrd/verify.hpp"

namespace tsrd {

bool is_path_graph(const Graph& g) {
    if (!is_connected(g) || g.size() != g.order() - 1) return false;
    return g.max_degree() <= 2;
}

bool is_cycle_graph(const Graph& g) {
    if (g.order() < 3 || !is_connected(g)) return false;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

bool is_star_graph(const Graph& g) {
    if (g.order() < 2 || !is_connected(g) || g.size() != g.order() - 1) return false;
    return g.max_degree() == g.order() - 1;
}

namespace {

// Corona recognition on one connected component (vertex list of g).
bool component_is_corona(const Graph& g, const std::vector<int>& comp) {
    if (comp.size() % 2 != 0) return false;
    if (comp.size() == 2) return true;  // K2 is the corona of a single vertex
    std::vector<int> leaves, base;
    for (int v : comp)
        (g.degree(v) == 1 ? leaves : base).push_back(v);
    if (leaves.size() != base.size() || base.empty()) return false;
    // Every base vertex carries exactly one pendant leaf.
    for (int b : base) {
        int pendant = 0;
        for (int w : g.neighbors(b))
            if (g.degree(w) == 1) ++pendant;
        if (pendant != 1) return false;
    }
    return true;
}

}  // namespace

bool is_corona(const Graph& g) {
    if (!is_connected(g)) return false;
    std::vector<int> all(g.order());
    for (int v = 0; v < g.order(); ++v) all[v] = v;
    return component_is_corona(g, all);
}

bool is_subdivided_star(const Graph& g) {
    // S(K_{1,k}): a center whose k neighbors all have degree 2, each with a
    // pendant second neighbor; order 2k+1.
    int n = g.order();
    if (n < 3 || n % 2 == 0 || !is_connected(g) || g.size() != n - 1) return false;
    int k = (n - 1) / 2;
    for (int center = 0; center < n; ++center) {
        if (g.degree(center) != k) continue;
        bool ok = true;
        for (int mid : g.neighbors(center)) {
            if (g.degree(mid) != 2) {
                ok = false;
                break;
            }
            for (int leaf : g.neighbors(mid))
                if (leaf != center && g.degree(leaf) != 1) ok = false;
        }
        if (ok) return true;
    }
    return false;
}

bool is_family_g_member(const Graph& g) {
    // Unicyclic with a 4-cycle; every other vertex lies on a pendant path of
    // length two hanging off at most two adjacent cycle vertices.
    int n = g.order();
    if (n < 6 || !is_connected(g) || g.size() != n) return false;
    Girth gr = girth(g);
    if (gr.is_unbounded() || gr.length() != 4) return false;

    // The unique cycle: vertices of degree >= 2 after peeling all trees.
    std::vector<int> degree(n);
    for (int v = 0; v < n; ++v) degree[v] = g.degree(v);
    std::vector<int> stack;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) stack.push_back(v);
    std::vector<bool> peeled(n, false);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        peeled[v] = true;
        for (int w : g.neighbors(v)) {
            if (!peeled[w] && --degree[w] == 1) stack.push_back(w);
        }
    }
    std::vector<int> cycle;
    for (int v = 0; v < n; ++v)
        if (!peeled[v]) cycle.push_back(v);
    if (cycle.size() != 4) return false;

    std::vector<bool> on_cycle(n, false);
    for (int v : cycle) on_cycle[v] = true;
    std::vector<int> attach;
    for (int v : cycle)
        if (g.degree(v) > 2) attach.push_back(v);
    if (attach.size() > 2) return false;
    if (attach.size() == 2 && !g.adjacent(attach[0], attach[1])) return false;

    // Off-cycle structure: middles (degree 2: one cycle attach point, one
    // leaf) and their leaves.
    for (int v = 0; v < n; ++v) {
        if (on_cycle[v]) continue;
        if (g.degree(v) == 1) {
            if (on_cycle[g.neighbors(v).front()]) return false;  // pendant edge, not a P2
            continue;
        }
        if (g.degree(v) != 2) return false;
        int cycle_side = 0, leaf_side = 0;
        for (int w : g.neighbors(v)) {
            if (on_cycle[w])
                ++cycle_side;
            else if (g.degree(w) == 1)
                ++leaf_side;
        }
        if (cycle_side != 1 || leaf_side != 1) return false;
    }
    return true;
}

bool is_family_h_member(const Graph& g) {
    // Double star with every pendant edge subdivided once and the central
    // edge subdivided r >= 0 times.
    int n = g.order();
    if (n < 6 || !is_connected(g) || g.size() != n - 1) return false;

    std::vector<int> leaves;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 1) leaves.push_back(v);
    if (leaves.size() < 2) return false;

    // Each leaf hangs off a degree-2 middle whose other neighbor is a center.
    std::vector<bool> is_middle(n, false);
    std::vector<int> centers;
    for (int leaf : leaves) {
        int mid = g.neighbors(leaf).front();
        if (g.degree(mid) != 2 || is_middle[mid]) return false;
        is_middle[mid] = true;
        int center = -1;
        for (int w : g.neighbors(mid))
            if (w != leaf) center = w;
        if (g.degree(center) == 1) return false;
        centers.push_back(center);
    }
    std::sort(centers.begin(), centers.end());
    centers.erase(std::unique(centers.begin(), centers.end()), centers.end());
    if (centers.size() != 2) return false;
    int c1 = centers[0], c2 = centers[1];

    // The rest must be the central path c1 - w1 - ... - wr - c2, all of
    // degree 2, and the centers carry nothing else.
    std::vector<bool> accounted(n, false);
    for (int leaf : leaves) accounted[leaf] = true;
    for (int v = 0; v < n; ++v)
        if (is_middle[v]) accounted[v] = true;
    accounted[c1] = accounted[c2] = true;
    for (int v = 0; v < n; ++v) {
        if (accounted[v]) continue;
        if (g.degree(v) != 2) return false;
        for (int w : g.neighbors(v))
            if (g.degree(w) == 1) return false;  // subdividers never touch leaves
    }
    // Centers: their middles plus exactly one central-path neighbor.
    for (int c : {c1, c2}) {
        int path_side = 0;
        for (int w : g.neighbors(c)) {
            if (is_middle[w]) continue;
            if (w == c1 || w == c2 || !accounted[w])
                ++path_side;
            else
                return false;
        }
        if (path_side != 1) return false;
    }
    // Connectivity plus the degree accounting forces the unaccounted
    // vertices to form a single c1-c2 path.
    return true;
}

bool all_components_k2(const Graph& g) {
    for (const auto& comp : components(g)) {
        if (comp.size() != 2) return false;
        if (!g.adjacent(comp[0], comp[1])) return false;
    }
    return true;
}

bool every_component_c4_or_corona(const Graph& g) {
    for (const auto& comp : components(g)) {
        Graph sub = induced_subgraph(g, comp);
        if (is_cycle_graph(sub) && sub.order() == 4) continue;
        std::vector<int> all(sub.order());
        for (int v = 0; v < sub.order(); ++v) all[v] = v;
        if (component_is_corona(sub, all)) continue;
        return false;
    }
    return true;
}

namespace {

const std::vector<Graph>& girth_list_graphs() {
    static const std::vector<Graph> list = [] {
        std::vector<Graph> graphs;
        graphs.push_back(realize(FamilySpec::path(4)));
        graphs.push_back(realize(FamilySpec::path(5)));
        graphs.push_back(realize(FamilySpec::cycle(4)));
        graphs.push_back(realize(FamilySpec::cycle(5)));
        graphs.push_back(realize(FamilySpec::double_star(1, 2)));
        graphs.push_back(fixed_graph(FixedGraphId::SK13));
        graphs.push_back(fixed_graph(FixedGraphId::F1));
        graphs.push_back(fixed_graph(FixedGraphId::F2));
        graphs.push_back(fixed_graph(FixedGraphId::F3));
        graphs.push_back(fixed_graph(FixedGraphId::F4));
        graphs.push_back(fixed_graph(FixedGraphId::F5));
        return graphs;
    }();
    return list;
}

}  // namespace

bool recognize_equality_class(const Graph& g, EqualityClass cls) {
    if (!is_connected(g)) return false;
    switch (cls) {
        case EqualityClass::ThnList:
            return is_path_graph(g) || is_cycle_graph(g) || is_corona(g) ||
                   is_subdivided_star(g) || is_family_g_member(g) || is_family_h_member(g);
        case EqualityClass::GirthList:
            for (const Graph& member : girth_list_graphs())
                if (isomorphic(g, member)) return true;
            return false;
    }
    return false;
}

}  // namespace tsrd
