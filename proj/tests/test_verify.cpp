#include <algorithm>
#include <map>
#include <sstream>

#include "doctest.h"
#include "tsrd/corpus.hpp"
#include "tsrd/families.hpp"
#include "tsrd/io.hpp"
#include "tsrd/verify.hpp"

using namespace tsrd;

namespace {

CheckOutcome run_check(const Graph& g, TheoremId id) { return check(g, id, compute_bundle(g)); }

Graph complete(int n) {
    std::vector<VertexPair> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph(n, edges);
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("recognizers on named graphs") {
    CHECK(is_path_graph(realize(FamilySpec::path(5))));
    CHECK(!is_path_graph(realize(FamilySpec::cycle(5))));
    CHECK(is_cycle_graph(realize(FamilySpec::cycle(5))));
    CHECK(is_star_graph(realize(FamilySpec::star(4))));
    CHECK(is_star_graph(Graph(2, {{0, 1}})));

    CHECK(is_corona(realize(FamilySpec::corona(realize(FamilySpec::cycle(3))))));
    CHECK(is_corona(realize(FamilySpec::corona(realize(FamilySpec::path(3))))));
    CHECK(is_corona(realize(FamilySpec::path(4))));  // corona of an edge
    CHECK(is_corona(Graph(2, {{0, 1}})));
    CHECK(!is_corona(realize(FamilySpec::path(5))));
    CHECK(!is_corona(realize(FamilySpec::star(4))));

    CHECK(is_subdivided_star(realize(FamilySpec::subdivided_star(3))));
    CHECK(is_subdivided_star(realize(FamilySpec::path(3))));  // S(K_{1,1})
    CHECK(!is_subdivided_star(realize(FamilySpec::double_star(2, 2))));

    CHECK(is_family_g_member(realize(FamilySpec::family_g(1, 0))));
    CHECK(is_family_g_member(realize(FamilySpec::family_g(2, 1))));
    CHECK(!is_family_g_member(realize(FamilySpec::cycle(4))));
    CHECK(!is_family_g_member(fixed_graph(FixedGraphId::F2)));

    CHECK(is_family_h_member(realize(FamilySpec::family_h(2, 2, 1))));
    CHECK(is_family_h_member(realize(FamilySpec::family_h(1, 2, 0))));
    CHECK(is_family_h_member(realize(FamilySpec::path(7))));  // both ends subdivided
    CHECK(!is_family_h_member(realize(FamilySpec::double_star(2, 2))));

    // Near-misses: a pendant path of length three, pendant paths on
    // opposite cycle vertices, a half-subdivided double star.
    CHECK(!is_family_g_member(
        Graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {5, 6}})));
    CHECK(!is_family_g_member(
        Graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {2, 6}, {6, 7}})));
    CHECK(!is_family_h_member(
        Graph(6, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}})));

    CHECK(all_components_k2(Graph(4, {{0, 1}, {2, 3}})));
    CHECK(!all_components_k2(realize(FamilySpec::path(3))));

    CHECK(every_component_c4_or_corona(realize(FamilySpec::cycle(4))));
    CHECK(every_component_c4_or_corona(realize(FamilySpec::corona(complete(3)))));
    CHECK(!every_component_c4_or_corona(realize(FamilySpec::path(5))));
}

TEST_CASE("equality class membership") {
    CHECK(recognize_equality_class(realize(FamilySpec::corona(realize(FamilySpec::path(3)))),
                                   EqualityClass::ThnList));
    CHECK(recognize_equality_class(realize(FamilySpec::family_h(2, 2, 1)), EqualityClass::ThnList));
    CHECK(!recognize_equality_class(complete(4), EqualityClass::ThnList));
    CHECK(gamma_tstrd(complete(4)) == 3);  // and indeed below the order

    CHECK(recognize_equality_class(realize(FamilySpec::cycle(4)), EqualityClass::GirthList));
    CHECK(recognize_equality_class(fixed_graph(FixedGraphId::F5), EqualityClass::GirthList));
    CHECK(!recognize_equality_class(realize(FamilySpec::path(6)), EqualityClass::GirthList));
}

TEST_CASE("check outcomes on named graphs") {
    auto c4_girth = run_check(realize(FamilySpec::cycle(4)), TheoremId::THM_GIRTH_EQ);
    CHECK(c4_girth.applicable);
    CHECK(c4_girth.holds);
    CHECK(c4_girth.equality == true);

    auto p3_plus1 = run_check(realize(FamilySpec::path(3)), TheoremId::PROP_GT_PLUS1);
    CHECK(p3_plus1.applicable);
    CHECK(p3_plus1.holds);
    CHECK(p3_plus1.equality == true);

    auto ng = run_check(realize(FamilySpec::path(4)), TheoremId::PROP_NG);
    CHECK(ng.applicable);
    CHECK(ng.holds);
    CHECK(ng.equality == true);  // sum = 8 = 2n for P4

    for (const Graph& t : all_trees(7)) {
        auto outcome = run_check(t, TheoremId::THM_TREE_GT);
        if (outcome.applicable) CHECK(outcome.holds);
    }
}

TEST_CASE("observation on optimal-function structure") {
    for (const Graph& g : {realize(FamilySpec::path(3)), realize(FamilySpec::star(4)),
                           realize(FamilySpec::cycle(6))}) {
        auto outcome = check_obs_ab(g);
        CHECK(outcome.applicable);
        CHECK(outcome.holds);
    }
    CHECK_THROWS_AS(check_obs_ab(Graph(2, {{0, 1}})), Error);
}

TEST_CASE("leaves-zero existential check") {
    CHECK(check_leaves_zero(realize(FamilySpec::path(4))).holds);
    CHECK(check_leaves_zero(realize(FamilySpec::double_star(2, 2))).holds);
    CHECK(check_leaves_zero(realize(FamilySpec::subdivided_star(3))).holds);
    CHECK_THROWS_AS(check_leaves_zero(realize(FamilySpec::star(4))), Error);
    CHECK_THROWS_AS(check_leaves_zero(realize(FamilySpec::cycle(4))), Error);
}

TEST_CASE("saturated-defender characterization") {
    auto p4 = check_ceil_gt_characterization(realize(FamilySpec::path(4)));
    CHECK(p4.holds);
    CHECK(p4.equality == true);
    CHECK(p4.witness.has_value());
    CHECK(*p4.witness == Labeling({0, 2, 2, 0}));

    auto p6 = check_ceil_gt_characterization(realize(FamilySpec::path(6)));
    CHECK(p6.holds);
    CHECK(p6.equality == false);
    CHECK(!p6.witness.has_value());

    auto star = check_ceil_gt_characterization(realize(FamilySpec::star(6)));
    CHECK(star.holds);
    CHECK(star.equality == false);
}

TEST_CASE("domination-bound consequence") {
    auto star = check_thm_three_consequence(realize(FamilySpec::star(6)));
    CHECK(star.holds);
    CHECK(star.equality == true);

    auto p6 = check_thm_three_consequence(realize(FamilySpec::path(6)));
    CHECK(p6.holds);
    CHECK(p6.equality == true);  // 6 = 3 * 2, and {1,4} is efficient

    auto c4 = check_thm_three_consequence(realize(FamilySpec::cycle(4)));
    CHECK(c4.holds);
    CHECK(c4.equality == false);
}

TEST_CASE("corpus counts match the published sequences") {
    const std::map<int, int> connected_counts = {{1, 1}, {2, 1}, {3, 2}, {4, 6}, {5, 21}, {6, 112}};
    for (auto [n, expected] : connected_counts)
        CHECK(static_cast<int>(connected_graphs(n).size()) == expected);
    const std::map<int, int> tree_counts = {{1, 1}, {2, 1}, {3, 1}, {4, 2},  {5, 3},
                                            {6, 6}, {7, 11}, {8, 23}, {9, 47}, {10, 106}};
    for (auto [n, expected] : tree_counts)
        CHECK(static_cast<int>(all_trees(n).size()) == expected);
}

TEST_CASE("corpus graphs are pairwise non-isomorphic") {
    auto graphs = connected_graphs(5);
    for (std::size_t i = 0; i < graphs.size(); ++i)
        for (std::size_t j = i + 1; j < graphs.size(); ++j)
            CHECK(!isomorphic(graphs[i], graphs[j]));
    auto trees = all_trees(8);
    for (std::size_t i = 0; i < trees.size(); ++i)
        for (std::size_t j = i + 1; j < trees.size(); ++j)
            CHECK(!isomorphic(trees[i], trees[j]));
}

TEST_CASE("exact class where the total strong value exceeds total domination by one") {
    // gamma_tstrd = gamma_t + 1 holds for P3 and C3 and for every order-4
    // graph with a universal vertex; the sweep documents this set exactly.
    std::vector<Graph> equality_graphs;
    for (int n = 3; n <= 6; ++n) {
        for (const Graph& g : connected_graphs(n)) {
            auto b = compute_bundle(g);
            if (*b.gamma_tstrd == *b.gamma_t + 1) equality_graphs.push_back(g);
        }
    }
    CHECK(equality_graphs.size() == 6);
    std::vector<Graph> expect = {realize(FamilySpec::path(3)),
                                 realize(FamilySpec::cycle(3)),
                                 realize(FamilySpec::star(4)),
                                 Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}}),          // paw
                                 Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}),  // diamond
                                 complete(4)};
    for (const Graph& g : expect) {
        bool found = false;
        for (const Graph& h : equality_graphs)
            if (isomorphic(g, h)) found = true;
        CHECK(found);
    }
}

TEST_CASE("sweep aggregates and stays deterministic across worker counts") {
    Corpus corpus = Corpus::all_connected(5);
    std::vector<TheoremId> ids = {TheoremId::OBS1, TheoremId::OBS_O2, TheoremId::THM_S,
                                  TheoremId::PROP_MINDEG, TheoremId::THM_TSTRD_EQ_N};
    Report one = sweep(corpus, ids, 1);
    Report four = sweep(corpus, ids, 4);
    CHECK(one.rows.size() == 31);  // 1+1+2+6+21
    REQUIRE(one.rows.size() == four.rows.size());
    for (std::size_t i = 0; i < one.rows.size(); ++i) {
        CHECK(one.rows[i].graph6 == four.rows[i].graph6);
        CHECK(one.rows[i].verdicts == four.rows[i].verdicts);
    }
    for (TheoremId id : ids) {
        CHECK(one.summary[id].applicable == four.summary[id].applicable);
        CHECK(one.summary[id].violations == four.summary[id].violations);
    }
    CHECK(one.summary[TheoremId::OBS1].violations == 0);
    CHECK(one.summary[TheoremId::OBS_O2].violations == 0);
    CHECK(one.summary[TheoremId::THM_S].violations == 0);
    CHECK(one.summary[TheoremId::PROP_MINDEG].violations == 0);
    CHECK(one.summary[TheoremId::THM_TSTRD_EQ_N].violations == 0);
}

TEST_CASE("explicit sweep over the sharpness list flags the miscast member") {
    // Ten of the eleven listed graphs attain the matching bound exactly;
    // F3 as drawn has a weight-5 function against a bound of 6.
    std::vector<Graph> listed = {realize(FamilySpec::path(4)),
                                 realize(FamilySpec::path(5)),
                                 realize(FamilySpec::cycle(4)),
                                 realize(FamilySpec::cycle(5)),
                                 realize(FamilySpec::double_star(1, 2)),
                                 fixed_graph(FixedGraphId::SK13),
                                 fixed_graph(FixedGraphId::F1),
                                 fixed_graph(FixedGraphId::F2),
                                 fixed_graph(FixedGraphId::F3),
                                 fixed_graph(FixedGraphId::F4),
                                 fixed_graph(FixedGraphId::F5)};
    int equalities = 0;
    for (const Graph& g : listed) {
        auto prof = profile(g);
        int bound = g.order() - prof.max_degree +
                    prof.matching_number * ceil_half(prof.max_degree - 1);
        if (gamma_tstrd(g) == bound) ++equalities;
    }
    CHECK(equalities == 10);
    CHECK(gamma_tstrd(fixed_graph(FixedGraphId::F3)) == 5);
    CHECK(validate_tstrd(fixed_graph(FixedGraphId::F3), Labeling({1, 1, 3, 0, 0, 0})).valid);
}

TEST_CASE("random corpora are reproducible from the seed") {
    Corpus a = Corpus::random(15, 7, 0.4, 2024);
    Corpus b = Corpus::random(15, 7, 0.4, 2024);
    Corpus c = Corpus::random(15, 7, 0.4, 2025);
    auto ga = realize_corpus(a), gb = realize_corpus(b), gc = realize_corpus(c);
    REQUIRE(ga.size() == 15);
    CHECK(ga == gb);
    CHECK(ga != gc);
}

TEST_CASE("theorem id round trip") {
    for (TheoremId id : all_theorems()) {
        auto parsed = parse_theorem(to_string(id));
        REQUIRE(parsed.has_value());
        CHECK(*parsed == id);
    }
    CHECK(!parse_theorem("NOPE").has_value());
    CHECK(all_theorems().size() == 28);
}

}  // TEST_SUITE
