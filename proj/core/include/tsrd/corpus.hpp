#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tsrd/graph.hpp"

namespace tsrd {

// A reproducible stream of test graphs.
struct Corpus {
    enum class Kind { AllConnected, AllTrees, Random, Explicit };

    Kind kind = Kind::Explicit;
    int max_n = 0;            // AllConnected / AllTrees: orders 1..max_n
    int count = 0;            // Random
    int n = 0;                // Random
    double edge_prob = 0.5;   // Random
    std::uint64_t seed = 1;   // Random
    bool dedup = true;        // AllConnected/AllTrees are always isomorphism-free
    std::vector<Graph> explicit_graphs;

    static Corpus all_connected(int max_n);
    static Corpus all_trees(int max_n);
    static Corpus random(int count, int n, double edge_prob, std::uint64_t seed);
    static Corpus explicit_list(std::vector<Graph> graphs);

    std::string describe() const;
};

// All pairwise non-isomorphic connected graphs on exactly n vertices,
// deduplicated by the minimum-adjacency-matrix canonical form (n <= 8).
std::vector<Graph> connected_graphs(int n);

// All pairwise non-isomorphic free trees on exactly n vertices.
std::vector<Graph> all_trees(int n);

std::vector<Graph> realize_corpus(const Corpus& corpus);

}  // namespace tsrd
