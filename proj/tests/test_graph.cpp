#include <algorithm>
#include <random>

#include "doctest.h"
#include "tsrd/corpus.hpp"
#include "tsrd/families.hpp"
#include "tsrd/graph.hpp"

using namespace tsrd;

namespace {

// Independent maximum-matching oracle: scan every edge subset.
int brute_force_matching(const Graph& g) {
    const auto& edges = g.edges();
    int m = g.size();
    REQUIRE(m <= 20);
    int best = 0;
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
        std::uint64_t covered = 0;
        bool ok = true;
        int size = 0;
        for (int i = 0; i < m && ok; ++i) {
            if (!((mask >> i) & 1u)) continue;
            std::uint64_t ends = (1ull << edges[i].first) | (1ull << edges[i].second);
            if (covered & ends) ok = false;
            covered |= ends;
            ++size;
        }
        if (ok) best = std::max(best, size);
    }
    return best;
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<VertexPair> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.push_back({u, v});
    return Graph(n, edges);
}

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("construction validates input") {
    Graph p3(3, {{0, 1}, {1, 2}});
    CHECK(p3.degree(0) == 1);
    CHECK(p3.degree(1) == 2);
    CHECK(p3.degree(2) == 1);

    Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    for (int v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);

    CHECK_THROWS_WITH_AS(Graph(3, {{0, 0}}), doctest::Contains("LoopEdge"), Error);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), Error);
    CHECK_THROWS_AS(Graph(2, {{0, 5}}), Error);
}

TEST_CASE("profile on small named graphs") {
    auto p4 = profile(realize(FamilySpec::path(4)));
    CHECK(p4.max_degree == 2);
    CHECK(p4.min_degree == 1);
    CHECK(p4.diameter == 3);
    CHECK(p4.girth.is_unbounded());
    CHECK(p4.matching_number == 2);
    CHECK(p4.leaves == std::vector<int>{0, 3});
    CHECK(p4.support_vertices == std::vector<int>{1, 2});
    CHECK(p4.is_tree);

    auto c5 = profile(realize(FamilySpec::cycle(5)));
    CHECK(c5.max_degree == 2);
    CHECK(c5.min_degree == 2);
    CHECK(c5.diameter == 2);
    CHECK(c5.girth == Girth::finite(5));
    CHECK(c5.matching_number == 2);

    auto star = profile(realize(FamilySpec::star(4)));  // K_{1,3}
    CHECK(star.max_degree == 3);
    CHECK(star.min_degree == 1);
    CHECK(star.matching_number == 1);
    CHECK(star.support_vertices == std::vector<int>{0});
}

TEST_CASE("complement of named graphs") {
    Graph p4 = realize(FamilySpec::path(4));
    CHECK(isomorphic(complement(p4), p4));  // self-complementary
    Graph c5 = realize(FamilySpec::cycle(5));
    CHECK(isomorphic(complement(c5), c5));
    Graph star = realize(FamilySpec::star(4));
    Graph co = complement(star);
    // K3 plus an isolated vertex
    CHECK(co.size() == 3);
    CHECK(co.degree(0) == 0);
    CHECK(!is_connected(co));
}

TEST_CASE("distance matrix") {
    Graph p3 = realize(FamilySpec::path(3));
    auto d = distance_matrix(p3);
    CHECK(d[0][2] == 2);
    CHECK(d[0][0] == 0);
    CHECK(d[2][0] == 2);

    Graph c4 = realize(FamilySpec::cycle(4));
    auto dc = distance_matrix(c4);
    int diam = 0;
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v) diam = std::max(diam, *dc[u][v]);
    CHECK(diam == 2);

    Graph two_edges(4, {{0, 1}, {2, 3}});
    auto dd = distance_matrix(two_edges);
    CHECK(!dd[0][2].has_value());
    CHECK(dd[0][1] == 1);

    // Symmetric with a zero diagonal.
    for (const auto& g : {realize(FamilySpec::cycle(5)), two_edges}) {
        auto m = distance_matrix(g);
        for (int u = 0; u < g.order(); ++u) {
            CHECK(m[u][u] == 0);
            for (int v = 0; v < g.order(); ++v) CHECK(m[u][v] == m[v][u]);
        }
    }
}

TEST_CASE("degree sum equals twice the edge count") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 9), 0.4);
        int total = 0;
        for (int v = 0; v < g.order(); ++v) total += g.degree(v);
        CHECK(total == 2 * g.size());
    }
}

TEST_CASE("girth unbounded exactly on acyclic graphs") {
    for (int n = 2; n <= 7; ++n)
        for (const Graph& t : all_trees(n)) CHECK(girth(t).is_unbounded());
    CHECK(girth(realize(FamilySpec::cycle(3))) == Girth::finite(3));
    CHECK(girth(realize(FamilySpec::cycle(6))) == Girth::finite(6));
    CHECK(girth(fixed_graph(FixedGraphId::F2)) == Girth::finite(4));
    // Disconnected acyclic
    CHECK(girth(Graph(5, {{0, 1}, {2, 3}})).is_unbounded());
    // Cycle plus far-away tree
    CHECK(girth(Graph(7, {{0, 1}, {1, 2}, {2, 0}, {4, 5}, {5, 6}})) == Girth::finite(3));
}

TEST_CASE("matching number against the edge-subset oracle") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 7), 0.45);
        if (g.size() > 14) continue;
        CHECK(matching_number(g) == brute_force_matching(g));
    }
    CHECK(matching_number(realize(FamilySpec::path(6))) == 3);
    CHECK(matching_number(realize(FamilySpec::star(6))) == 1);
    CHECK(matching_number(fixed_graph(FixedGraphId::F3)) == 2);
    CHECK(matching_number(realize(FamilySpec::family_g(1, 0))) == 3);
}

TEST_CASE("complement is an involution") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 8), 0.5);
        CHECK(complement(complement(g)) == g);
    }
}

TEST_CASE("diameter equals the largest pairwise distance") {
    std::mt19937_64 rng(31);
    int connected_seen = 0;
    while (connected_seen < 20) {
        Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 7), 0.5);
        if (!is_connected(g)) continue;
        ++connected_seen;
        auto d = distance_matrix(g);
        int widest = 0;
        for (int u = 0; u < g.order(); ++u)
            for (int v = 0; v < g.order(); ++v) widest = std::max(widest, *d[u][v]);
        CHECK(profile(g).diameter == widest);
    }
}

TEST_CASE("isomorphism distinguishes same-degree-sequence graphs") {
    // C6 versus two triangles: both 2-regular on six vertices.
    Graph c6 = realize(FamilySpec::cycle(6));
    Graph triangles(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    CHECK(!isomorphic(c6, triangles));
    CHECK(isomorphic(c6, Graph(6, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 5}, {5, 0}})));
}

TEST_CASE("induced subgraph keeps the selected edges") {
    Graph c5 = realize(FamilySpec::cycle(5));
    Graph sub = induced_subgraph(c5, {0, 1, 2});
    CHECK(sub.order() == 3);
    CHECK(sub.size() == 2);
    CHECK(sub.adjacent(0, 1));
    CHECK(sub.adjacent(1, 2));
}

}  // TEST_SUITE
