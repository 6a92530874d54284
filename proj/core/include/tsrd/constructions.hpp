#pragma once

#include <optional>
#include <vector>

#include "tsrd/graph.hpp"
#include "tsrd/labeling.hpp"
#include "tsrd/theorems.hpp"

namespace tsrd {

// A labeling produced by a proof construction. Construction fails loudly
// (CertificateFailure) unless the labeling validates as TStRD and its
// weight is within the claimed bound.
struct CertifiedLabeling {
    Labeling labeling;
    int claimed_bound;
    TheoremId theorem;
};

// Case routing for the matching-number construction:
//   0  closed neighborhood of the max-degree vertex covers the graph
//   1  no isolated vertex in the subgraph induced outside it (S empty)
//   2..5  the four constructive cases (S'=N(v)/S'⊊N(v) x S=X/S⊊X)
int matching_bound_case(const Graph& g);

// claimed: n - maxdeg + matching * ceil((maxdeg-1)/2)
CertifiedLabeling construct_matching_bound(const Graph& g);

// claimed: n - floor((mindeg-1)/2)
CertifiedLabeling construct_mindeg_bound(const Graph& g);

// claimed: mindeg * (1 + ceil((maxdeg-1)/2)) + 1; requires diameter 2
CertifiedLabeling construct_diam2_bound(const Graph& g);

// claimed: n - floor((diam+1)/3); requires mindeg >= 3
CertifiedLabeling construct_diametral_path_bound(const Graph& g);

// claimed: n - floor(girth/3); requires finite girth >= 4 and mindeg >= 3
CertifiedLabeling construct_girth_cycle_bound(const Graph& g);

// claimed: (ceil((maxdeg-1)/2) + 2) * |S| with S the given dominating set
// or a minimum one
CertifiedLabeling construct_domset_bound(const Graph& g,
                                         const std::optional<std::vector<int>>& s = std::nullopt);

// claimed: ceil((maxdeg+1)/2) * |S| with S the given total dominating set
// or a minimum one
CertifiedLabeling construct_total_domset_bound(const Graph& g,
                                               const std::optional<std::vector<int>>& s = std::nullopt);

}  // namespace tsrd
