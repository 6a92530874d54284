#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "tsrd/constructions.hpp"
#include "tsrd/graph.hpp"
#include "tsrd/labeling.hpp"
#include "tsrd/solvers.hpp"
#include "tsrd/verify.hpp"

namespace tsrd {

// Standard graph6, short format only (order <= 62). Round-trips bit-exactly.
Graph parse_graph6(std::string_view line);
std::string emit_graph6(const Graph& g);

// Plain edge list: first line "n m", then m lines "u v" (0-indexed).
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

struct LabelingDocument {
    int order = 0;
    std::vector<int> labels;
    std::optional<std::string> graph6;      // optional graph reference
    std::optional<std::string> edges_path;  // alternative reference: edge-list file
};

LabelingDocument parse_labeling_document(const std::string& json_text);
std::string emit_labeling_document(const LabelingDocument& doc);

// JSON fragments used by the CLI; stable key order.
std::string param_bundle_json(const ParamBundle& bundle);
std::string verdict_json(const Verdict& verdict);
std::string certified_labeling_json(const CertifiedLabeling& cert);

void write_report_csv(const Report& report, std::ostream& out);
void write_report_json(const Report& report, std::ostream& out);

}  // namespace tsrd
