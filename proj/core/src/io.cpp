#include "tsrd/io.hpp"

#include <ostream>
#include <sstream>

#include "json.hpp"

namespace tsrd {

using nlohmann::json;
using nlohmann::ordered_json;

Graph parse_graph6(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.remove_suffix(1);
    if (line.empty()) throw Error(ErrorCode::MalformedGraph6, "empty line");
    for (char c : line)
        if (c < 63 || c > 126)
            throw Error(ErrorCode::MalformedGraph6, "character out of range");
    int n = line[0] - 63;
    if (n > 62) throw Error(ErrorCode::MalformedGraph6, "long format unsupported");
    if (n < 1) throw Error(ErrorCode::MalformedGraph6, "order must be positive");
    int bits = n * (n - 1) / 2;
    std::size_t expected = 1 + (bits + 5) / 6;
    if (line.size() != expected)
        throw Error(ErrorCode::MalformedGraph6, "expected " + std::to_string(expected) +
                                                    " characters, got " +
                                                    std::to_string(line.size()));
    std::vector<VertexPair> edges;
    int bit_index = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            int byte = line[1 + bit_index / 6] - 63;
            int bit = (byte >> (5 - bit_index % 6)) & 1;
            if (bit) edges.push_back({i, j});
            ++bit_index;
        }
    }
    // Padding bits must be zero.
    for (int k = bits; k < 6 * static_cast<int>(expected - 1); ++k) {
        int byte = line[1 + k / 6] - 63;
        if ((byte >> (5 - k % 6)) & 1)
            throw Error(ErrorCode::MalformedGraph6, "nonzero padding");
    }
    return Graph(n, edges);
}

std::string emit_graph6(const Graph& g) {
    int n = g.order();
    std::string out(1, static_cast<char>(63 + n));
    int buffer = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            buffer = (buffer << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + buffer));
                buffer = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(63 + (buffer << (6 - filled))));
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    int n = 0, m = 0;
    if (!(in >> n >> m)) throw Error(ErrorCode::ParseError, "expected header 'n m'");
    std::vector<VertexPair> edges;
    for (int i = 0; i < m; ++i) {
        int u = 0, v = 0;
        if (!(in >> u >> v))
            throw Error(ErrorCode::ParseError, "expected " + std::to_string(m) + " edges");
        edges.push_back({u, v});
    }
    return Graph(n, edges);
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << " " << g.size() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

LabelingDocument parse_labeling_document(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    if (!doc.is_object() || !doc.contains("order") || !doc.contains("labels"))
        throw Error(ErrorCode::ParseError, "labeling document needs 'order' and 'labels'");
    LabelingDocument out;
    out.order = doc["order"].get<int>();
    for (const auto& value : doc["labels"]) {
        int label = value.get<int>();
        if (label < 0) throw Error(ErrorCode::InvalidLabel, "labels must be non-negative");
        out.labels.push_back(label);
    }
    if (static_cast<int>(out.labels.size()) != out.order)
        throw Error(ErrorCode::SizeMismatch, "labels length differs from order");
    if (doc.contains("graph6")) out.graph6 = doc["graph6"].get<std::string>();
    if (doc.contains("edges_file")) out.edges_path = doc["edges_file"].get<std::string>();
    return out;
}

std::string emit_labeling_document(const LabelingDocument& doc) {
    ordered_json j;
    j["order"] = doc.order;
    j["labels"] = doc.labels;
    if (doc.graph6) j["graph6"] = *doc.graph6;
    if (doc.edges_path) j["edges_file"] = *doc.edges_path;
    return j.dump();
}

namespace {

ordered_json bundle_to_json(const ParamBundle& b) {
    ordered_json j;
    j["gamma"] = b.gamma;
    j["gamma_t"] = b.gamma_t ? json(*b.gamma_t) : json(nullptr);
    j["gamma_r"] = b.gamma_r;
    j["gamma_tr"] = b.gamma_tr ? json(*b.gamma_tr) : json(nullptr);
    j["gamma_strd"] = b.gamma_strd;
    j["gamma_tstrd"] = b.gamma_tstrd ? json(*b.gamma_tstrd) : json(nullptr);
    return j;
}

const char* verdict_name(RowVerdict v) {
    switch (v) {
        case RowVerdict::NotApplicable: return "na";
        case RowVerdict::Holds: return "holds";
        case RowVerdict::HoldsWithEquality: return "eq";
        case RowVerdict::Violation: return "VIOLATION";
    }
    return "";
}

std::string girth_text(const Girth& g) {
    return g.is_unbounded() ? "inf" : std::to_string(g.length());
}

std::string opt_text(const std::optional<int>& v) {
    return v ? std::to_string(*v) : "na";
}

}  // namespace

std::string param_bundle_json(const ParamBundle& bundle) { return bundle_to_json(bundle).dump(); }

std::string verdict_json(const Verdict& verdict) {
    ordered_json j;
    j["valid"] = verdict.valid;
    ordered_json list = ordered_json::array();
    for (const auto& v : verdict.violations) {
        ordered_json item;
        switch (v.kind) {
            case Violation::Kind::UnguardedZero: item["kind"] = "UnguardedZero"; break;
            case Violation::Kind::WeakDefender: item["kind"] = "WeakDefender"; break;
            case Violation::Kind::IsolatedPositive: item["kind"] = "IsolatedPositive"; break;
            case Violation::Kind::LabelOverCap: item["kind"] = "LabelOverCap"; break;
        }
        item["vertex"] = v.vertex;
        if (v.kind == Violation::Kind::WeakDefender) {
            item["defender"] = v.defender;
            item["required"] = v.required;
            item["actual"] = v.actual;
        }
        if (v.kind == Violation::Kind::LabelOverCap) {
            item["cap"] = v.required;
            item["actual"] = v.actual;
        }
        item["message"] = v.describe();
        list.push_back(std::move(item));
    }
    j["violations"] = std::move(list);
    return j.dump();
}

std::string certified_labeling_json(const CertifiedLabeling& cert) {
    ordered_json j;
    j["theorem"] = to_string(cert.theorem);
    j["labels"] = cert.labeling.labels();
    j["weight"] = cert.labeling.weight();
    j["claimed_bound"] = cert.claimed_bound;
    return j.dump();
}

void write_report_csv(const Report& report, std::ostream& out) {
    out << "graph6,n,m,maxdeg,mindeg,girth,diam,gamma,gamma_t,gamma_r,gamma_tr,gamma_strd,"
           "gamma_tstrd";
    for (TheoremId id : report.theorems) out << "," << to_string(id);
    out << "\n";
    for (const SweepRow& row : report.rows) {
        out << row.graph6 << "," << row.n << "," << row.m << "," << row.max_degree << ","
            << row.min_degree << "," << girth_text(row.girth) << "," << opt_text(row.diameter)
            << "," << row.params.gamma << "," << opt_text(row.params.gamma_t) << ","
            << row.params.gamma_r << "," << opt_text(row.params.gamma_tr) << ","
            << row.params.gamma_strd << "," << opt_text(row.params.gamma_tstrd);
        for (RowVerdict v : row.verdicts) out << "," << verdict_name(v);
        out << "\n";
    }
}

void write_report_json(const Report& report, std::ostream& out) {
    ordered_json j;
    j["corpus"] = report.corpus;
    j["size"] = report.rows.size();
    ordered_json names = ordered_json::array();
    for (TheoremId id : report.theorems) names.push_back(to_string(id));
    j["theorems"] = std::move(names);
    ordered_json summary;
    for (TheoremId id : report.theorems) {
        auto it = report.summary.find(id);
        TheoremSummary s = it == report.summary.end() ? TheoremSummary{} : it->second;
        ordered_json row;
        row["applicable"] = s.applicable;
        row["holds"] = s.holds;
        row["equality"] = s.equality;
        row["violations"] = s.violations;
        summary[to_string(id)] = std::move(row);
    }
    j["summary"] = std::move(summary);
    ordered_json violations = ordered_json::array();
    for (const SweepViolation& v : report.violations) {
        ordered_json item;
        item["graph6"] = v.graph6;
        item["theorem"] = to_string(v.theorem);
        item["detail"] = v.detail;
        if (v.witness) item["witness_labels"] = v.witness->labels();
        if (v.witness_set) item["witness_set"] = *v.witness_set;
        violations.push_back(std::move(item));
    }
    j["violations"] = std::move(violations);
    out << j.dump(2) << "\n";
}

}  // namespace tsrd
