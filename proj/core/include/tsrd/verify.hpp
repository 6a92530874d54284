#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tsrd/corpus.hpp"
#include "tsrd/graph.hpp"
#include "tsrd/labeling.hpp"
#include "tsrd/solvers.hpp"
#include "tsrd/theorems.hpp"

namespace tsrd {

// One theorem's verdict on one graph. `holds` is meaningful only when
// `applicable`; `equality` is set where the statement has a sharp case.
struct CheckOutcome {
    TheoremId theorem;
    bool applicable = false;
    bool holds = true;
    std::optional<bool> equality;
    std::optional<Labeling> witness;
    std::optional<std::vector<int>> witness_set;
    std::string detail;
};

// Evaluates the hypothesis side conditions of `id`, then the conclusion
// against exact solver values. Inapplicable graphs never count as
// violations. `bundle` must have been computed for g.
CheckOutcome check(const Graph& g, TheoremId id, const ParamBundle& bundle);

// Enumeration-backed checks (all optimal TStRD functions are inspected).
CheckOutcome check_obs_ab(const Graph& g, int order_cap = 10);
CheckOutcome check_leaves_zero(const Graph& t, int order_cap = 10);
CheckOutcome check_ceil_gt_characterization(const Graph& g, int order_cap = 10);
CheckOutcome check_thm_three_consequence(const Graph& g, int order_cap = 10);

enum class EqualityClass { ThnList, GirthList };

// Structural recognition of the extremal classes:
//   ThnList: paths, cycles, coronas, subdivided stars, families G and H
//   GirthList: the eleven fixed sharpness graphs
bool recognize_equality_class(const Graph& g, EqualityClass cls);

// Individual recognizers (g need not be connected unless stated).
bool is_path_graph(const Graph& g);
bool is_cycle_graph(const Graph& g);
bool is_star_graph(const Graph& g);
bool is_corona(const Graph& g);
bool is_subdivided_star(const Graph& g);
bool is_family_g_member(const Graph& g);
bool is_family_h_member(const Graph& g);
bool all_components_k2(const Graph& g);
bool every_component_c4_or_corona(const Graph& g);

enum class RowVerdict { NotApplicable, Holds, HoldsWithEquality, Violation };

struct SweepRow {
    std::string graph6;
    int n = 0;
    int m = 0;
    int max_degree = 0;
    int min_degree = 0;
    Girth girth = Girth::unbounded();
    std::optional<int> diameter;
    ParamBundle params;
    std::vector<RowVerdict> verdicts;  // aligned with the requested theorem list
};

struct SweepViolation {
    std::string graph6;
    TheoremId theorem;
    std::string detail;
    std::optional<Labeling> witness;
    std::optional<std::vector<int>> witness_set;
};

struct TheoremSummary {
    int applicable = 0;
    int holds = 0;
    int equality = 0;
    int violations = 0;
};

struct Report {
    std::string corpus;
    std::vector<TheoremId> theorems;
    std::vector<SweepRow> rows;
    std::map<TheoremId, TheoremSummary> summary;
    std::vector<SweepViolation> violations;
};

// Streams the corpus, computes each ParamBundle once, runs every requested
// check. Graphs are partitioned across workers (0 = TSRD_WORKERS env var or
// hardware concurrency); the merge is order-insensitive so results do not
// depend on the worker count.
Report sweep(const Corpus& corpus, const std::vector<TheoremId>& theorems, int workers = 0);

}  // namespace tsrd
