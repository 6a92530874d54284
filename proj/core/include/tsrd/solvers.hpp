#pragma once

#include <optional>
#include <vector>

#include "tsrd/graph.hpp"
#include "tsrd/labeling.hpp"

namespace tsrd {

enum class Engine { Oracle, BranchBound };

// The six exactly computed parameters for one graph. Total variants are
// empty exactly when the graph has an isolated vertex.
struct ParamBundle {
    int gamma = 0;
    std::optional<int> gamma_t;
    int gamma_r = 0;
    std::optional<int> gamma_tr;
    int gamma_strd = 0;
    std::optional<int> gamma_tstrd;
};

int gamma(const Graph& g);
int gamma_t(const Graph& g);   // throws IsolatedVertexInGraph
int gamma_r(const Graph& g);
int gamma_tr(const Graph& g);  // throws IsolatedVertexInGraph
int gamma_strd(const Graph& g);
int gamma_tstrd(const Graph& g, Engine engine = Engine::BranchBound);

ParamBundle compute_bundle(const Graph& g, Engine engine = Engine::BranchBound);

struct OptimalSet {
    int weight = 0;
    std::vector<Labeling> functions;  // lexicographically ordered
};

// All optimal TStRD functions; throws InstanceTooLarge above the cap.
OptimalSet enumerate_optimal_tstrd(const Graph& g, int order_cap = 10);

// True iff every vertex is closed-dominated by exactly one member of d.
bool is_efficient_dominating_set(const Graph& g, const std::vector<int>& d);

// Witness helpers used by constructions and the verify harness.
std::vector<int> minimum_dominating_set(const Graph& g);
std::vector<int> minimum_total_dominating_set(const Graph& g);
std::vector<std::vector<int>> all_minimum_dominating_sets(const Graph& g);

// Deterministic optimal StRD labeling (exact search, incumbent seeded with
// the all-ones labeling).
Labeling optimal_strd_labeling(const Graph& g);

bool is_dominating_set(const Graph& g, const std::vector<int>& s);
bool is_total_dominating_set(const Graph& g, const std::vector<int>& s);

}  // namespace tsrd
