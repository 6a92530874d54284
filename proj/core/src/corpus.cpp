#include "tsrd/corpus.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <unordered_set>

namespace tsrd {

Corpus Corpus::all_connected(int max_n) {
    Corpus c;
    c.kind = Kind::AllConnected;
    c.max_n = max_n;
    return c;
}

Corpus Corpus::all_trees(int max_n) {
    Corpus c;
    c.kind = Kind::AllTrees;
    c.max_n = max_n;
    return c;
}

Corpus Corpus::random(int count, int n, double edge_prob, std::uint64_t seed) {
    Corpus c;
    c.kind = Kind::Random;
    c.count = count;
    c.n = n;
    c.edge_prob = edge_prob;
    c.seed = seed;
    return c;
}

Corpus Corpus::explicit_list(std::vector<Graph> graphs) {
    Corpus c;
    c.kind = Kind::Explicit;
    c.explicit_graphs = std::move(graphs);
    return c;
}

std::string Corpus::describe() const {
    switch (kind) {
        case Kind::AllConnected: return "all-connected<=" + std::to_string(max_n);
        case Kind::AllTrees: return "all-trees<=" + std::to_string(max_n);
        case Kind::Random:
            return "random(count=" + std::to_string(count) + ",n=" + std::to_string(n) +
                   ",p=" + std::to_string(edge_prob) + ",seed=" + std::to_string(seed) + ")";
        case Kind::Explicit: return "explicit(" + std::to_string(explicit_graphs.size()) + ")";
    }
    return "";
}

namespace {

// Non-isomorphic graphs on exactly n vertices, built by extending every
// (n-1)-vertex graph with one vertex over all attachment masks, dedup by
// the canonical minimum-adjacency key at each level.
std::vector<Graph> all_graphs(int n) {
    if (n < 1 || n > 8)
        throw Error(ErrorCode::InstanceTooLarge, "graph enumeration supports 1 <= n <= 8");
    std::vector<Graph> level = {Graph(1, {})};
    for (int k = 1; k < n; ++k) {
        std::unordered_set<std::uint64_t> seen;
        std::vector<Graph> next;
        for (const Graph& g : level) {
            std::vector<VertexPair> base_edges = g.edges();
            for (std::uint64_t mask = 0; mask < (1ull << k); ++mask) {
                std::vector<VertexPair> edges = base_edges;
                for (int v = 0; v < k; ++v)
                    if ((mask >> v) & 1u) edges.push_back({v, k});
                Graph candidate(k + 1, edges);
                if (seen.insert(canonical_key(candidate)).second)
                    next.push_back(std::move(candidate));
            }
        }
        level = std::move(next);
    }
    return level;
}

// AHU-style canonical string of a free tree, rooted at its center.
std::string tree_key(const Graph& t) {
    int n = t.order();
    if (n == 1) return "()";
    std::vector<int> degree(n);
    for (int v = 0; v < n; ++v) degree[v] = t.degree(v);
    std::vector<int> layer;
    std::vector<bool> removed(n, false);
    for (int v = 0; v < n; ++v)
        if (degree[v] <= 1) layer.push_back(v);
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : layer) {
            removed[v] = true;
            --remaining;
            for (int w : t.neighbors(v))
                if (!removed[w] && --degree[w] == 1) next.push_back(w);
        }
        layer = std::move(next);
    }
    std::vector<int> centers;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) centers.push_back(v);

    std::function<std::string(int, int)> encode = [&](int v, int parent) {
        std::vector<std::string> children;
        for (int w : t.neighbors(v))
            if (w != parent) children.push_back(encode(w, v));
        std::sort(children.begin(), children.end());
        std::string out = "(";
        for (const auto& c : children) out += c;
        out += ")";
        return out;
    };
    if (centers.size() == 1) return encode(centers[0], -1);
    std::string a = encode(centers[0], centers[1]);
    std::string b = encode(centers[1], centers[0]);
    if (b < a) std::swap(a, b);
    return a + "|" + b;
}

}  // namespace

std::vector<Graph> connected_graphs(int n) {
    std::vector<Graph> out;
    for (Graph& g : all_graphs(n))
        if (is_connected(g)) out.push_back(std::move(g));
    return out;
}

std::vector<Graph> all_trees(int n) {
    if (n < 1) throw Error(ErrorCode::InvalidFamilyParams, "trees need n >= 1");
    std::vector<Graph> level = {Graph(1, {})};
    for (int k = 1; k < n; ++k) {
        std::unordered_set<std::string> seen;
        std::vector<Graph> next;
        for (const Graph& t : level) {
            std::vector<VertexPair> base_edges = t.edges();
            for (int attach = 0; attach < k; ++attach) {
                std::vector<VertexPair> edges = base_edges;
                edges.push_back({attach, k});
                Graph candidate(k + 1, edges);
                if (seen.insert(tree_key(candidate)).second) next.push_back(std::move(candidate));
            }
        }
        level = std::move(next);
    }
    return level;
}

std::vector<Graph> realize_corpus(const Corpus& corpus) {
    std::vector<Graph> out;
    switch (corpus.kind) {
        case Corpus::Kind::AllConnected:
            for (int n = 1; n <= corpus.max_n; ++n)
                for (Graph& g : connected_graphs(n)) out.push_back(std::move(g));
            return out;
        case Corpus::Kind::AllTrees:
            for (int n = 1; n <= corpus.max_n; ++n)
                for (Graph& g : all_trees(n)) out.push_back(std::move(g));
            return out;
        case Corpus::Kind::Random: {
            std::mt19937_64 rng(corpus.seed);
            std::bernoulli_distribution coin(corpus.edge_prob);
            for (int i = 0; i < corpus.count; ++i) {
                std::vector<VertexPair> edges;
                for (int u = 0; u < corpus.n; ++u)
                    for (int v = u + 1; v < corpus.n; ++v)
                        if (coin(rng)) edges.push_back({u, v});
                out.push_back(Graph(corpus.n, edges));
            }
            return out;
        }
        case Corpus::Kind::Explicit:
            return corpus.explicit_graphs;
    }
    return out;
}

}  // namespace tsrd
