#include <set>

#include "doctest.h"
#include "tsrd/constructions.hpp"
#include "tsrd/corpus.hpp"
#include "tsrd/families.hpp"
#include "tsrd/solvers.hpp"
#include "tsrd/verify.hpp"

using namespace tsrd;

namespace {

Graph complete(int n) {
    std::vector<VertexPair> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph(n, edges);
}

Graph complete_bipartite(int a, int b) {
    std::vector<VertexPair> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.push_back({u, a + v});
    return Graph(a + b, edges);
}

Graph cube() {
    return Graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4},
                     {0, 4}, {1, 5}, {2, 6}, {3, 7}});
}

Graph petersen() {
    return Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                      {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},
                      {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
}

void check_certificate(const Graph& g, const CertifiedLabeling& cert) {
    CHECK(validate_tstrd(g, cert.labeling).valid);
    CHECK(cert.labeling.weight() <= cert.claimed_bound);
    CHECK(cert.claimed_bound >= gamma_tstrd(g));
}

}  // namespace

TEST_SUITE("constructions") {

TEST_CASE("matching bound") {
    Graph c4 = realize(FamilySpec::cycle(4));
    auto cert = construct_matching_bound(c4);
    CHECK(cert.claimed_bound == 4);
    CHECK(cert.labeling.weight() <= 4);
    check_certificate(c4, cert);
    CHECK(gamma_tstrd(c4) == 4);  // equality member

    Graph ds12 = realize(FamilySpec::double_star(1, 2));
    auto cert2 = construct_matching_bound(ds12);
    CHECK(cert2.claimed_bound == 4);
    check_certificate(ds12, cert2);
    CHECK(gamma_tstrd(ds12) == 4);

    Graph p6 = realize(FamilySpec::path(6));
    auto cert3 = construct_matching_bound(p6);
    CHECK(cert3.claimed_bound == 7);
    CHECK(gamma_tstrd(p6) == 6);
    check_certificate(p6, cert3);

    CHECK_THROWS_AS(construct_matching_bound(realize(FamilySpec::star(6))), Error);
    CHECK_THROWS_AS(construct_matching_bound(realize(FamilySpec::path(3))), Error);
    // Disjoint edges: the claimed bound would be n-1 < n = the exact value.
    CHECK_THROWS_AS(construct_matching_bound(Graph(4, {{0, 1}, {2, 3}})), Error);
}

TEST_CASE("matching bound case routing is total and all cases occur") {
    std::set<int> seen;
    for (int n = 4; n <= 7; ++n) {
        for (const Graph& g : connected_graphs(n)) {
            if (is_star_graph(g)) continue;
            int proof_case = matching_bound_case(g);
            CHECK(proof_case >= 0);
            CHECK(proof_case <= 5);
            seen.insert(proof_case);
            check_certificate(g, construct_matching_bound(g));
        }
    }
    CHECK(seen == std::set<int>{0, 1, 2, 4, 5});

    // The remaining case (cover equals the whole neighborhood while the
    // outside still has an edge) first appears at order nine: a degree-3
    // hub whose neighbors each carry a private pendant, plus an edge
    // hanging off one pendant's side.
    Graph spread(9, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}, {1, 7}, {7, 8}});
    CHECK(matching_bound_case(spread) == 3);
    check_certificate(spread, construct_matching_bound(spread));
}

TEST_CASE("min degree bound") {
    Graph c5 = realize(FamilySpec::cycle(5));
    auto cert = construct_mindeg_bound(c5);
    CHECK(cert.claimed_bound == 5);
    check_certificate(c5, cert);
    CHECK(gamma_tstrd(c5) == 5);

    Graph k4 = complete(4);
    auto cert2 = construct_mindeg_bound(k4);
    CHECK(cert2.claimed_bound == 3);
    CHECK(gamma_tstrd(k4) == 3);
    check_certificate(k4, cert2);

    Graph p4 = realize(FamilySpec::path(4));
    auto cert3 = construct_mindeg_bound(p4);
    CHECK(cert3.claimed_bound == 4);
    CHECK(gamma_tstrd(p4) == 4);
}

TEST_CASE("diameter two bound") {
    Graph c5 = realize(FamilySpec::cycle(5));
    auto cert = construct_diam2_bound(c5);
    CHECK(cert.claimed_bound == 5);
    check_certificate(c5, cert);

    Graph star5 = realize(FamilySpec::star(5));  // K_{1,4}
    auto cert2 = construct_diam2_bound(star5);
    CHECK(cert2.claimed_bound == 4);
    CHECK(gamma_tstrd(star5) == 4);
    check_certificate(star5, cert2);

    Graph c4 = realize(FamilySpec::cycle(4));
    auto cert3 = construct_diam2_bound(c4);
    CHECK(cert3.claimed_bound == 5);
    check_certificate(c4, cert3);

    CHECK_THROWS_AS(construct_diam2_bound(realize(FamilySpec::path(5))), Error);
}

TEST_CASE("diametral path bound") {
    Graph k4 = complete(4);
    auto cert = construct_diametral_path_bound(k4);
    CHECK(cert.claimed_bound == 4);
    check_certificate(k4, cert);

    Graph k33 = complete_bipartite(3, 3);
    auto cert2 = construct_diametral_path_bound(k33);
    CHECK(cert2.claimed_bound == 5);
    check_certificate(k33, cert2);

    Graph k5 = complete(5);
    auto cert3 = construct_diametral_path_bound(k5);
    CHECK(cert3.claimed_bound == 5);
    CHECK(gamma_tstrd(k5) == 4);
    check_certificate(k5, cert3);

    CHECK_THROWS_AS(construct_diametral_path_bound(realize(FamilySpec::path(5))), Error);
}

TEST_CASE("girth cycle bound") {
    Graph k33 = complete_bipartite(3, 3);
    auto cert = construct_girth_cycle_bound(k33);
    CHECK(cert.claimed_bound == 5);
    check_certificate(k33, cert);

    auto cert2 = construct_girth_cycle_bound(cube());
    CHECK(cert2.claimed_bound == 7);
    check_certificate(cube(), cert2);

    auto cert3 = construct_girth_cycle_bound(petersen());
    CHECK(cert3.claimed_bound == 9);
    check_certificate(petersen(), cert3);

    CHECK_THROWS_AS(construct_girth_cycle_bound(complete(4)), Error);          // girth 3
    CHECK_THROWS_AS(construct_girth_cycle_bound(realize(FamilySpec::cycle(5))), Error);  // mindeg 2
}

TEST_CASE("domination set bound") {
    Graph star6 = realize(FamilySpec::star(6));  // K_{1,5}
    auto cert = construct_domset_bound(star6);
    CHECK(cert.claimed_bound == 4);
    CHECK(gamma_tstrd(star6) == 4);
    check_certificate(star6, cert);

    Graph p6 = realize(FamilySpec::path(6));
    auto cert2 = construct_domset_bound(p6);
    CHECK(cert2.claimed_bound == 6);
    CHECK(gamma_tstrd(p6) == 6);
    check_certificate(p6, cert2);

    Graph c4 = realize(FamilySpec::cycle(4));
    auto cert3 = construct_domset_bound(c4);
    CHECK(cert3.claimed_bound == 6);
    check_certificate(c4, cert3);

    // Caller-provided sets are validated.
    CHECK_THROWS_AS(construct_domset_bound(p6, std::vector<int>{0, 1}), Error);
    auto custom = construct_domset_bound(p6, std::vector<int>{1, 4});
    check_certificate(p6, custom);
}

TEST_CASE("total domination set bound") {
    Graph p4 = realize(FamilySpec::path(4));
    auto cert = construct_total_domset_bound(p4);
    CHECK(cert.claimed_bound == 4);
    CHECK(gamma_tstrd(p4) == 4);
    check_certificate(p4, cert);

    Graph star6 = realize(FamilySpec::star(6));
    auto cert2 = construct_total_domset_bound(star6);
    CHECK(cert2.claimed_bound == 6);
    check_certificate(star6, cert2);

    Graph c6 = realize(FamilySpec::cycle(6));
    auto cert3 = construct_total_domset_bound(c6);
    CHECK(cert3.claimed_bound == 8);
    CHECK(gamma_tstrd(c6) == 6);
    check_certificate(c6, cert3);

    CHECK_THROWS_AS(construct_total_domset_bound(p4, std::vector<int>{0, 3}), Error);
}

}  // TEST_SUITE
