#include "tsrd/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "tsrd/constructions.hpp"
#include "tsrd/families.hpp"
#include "tsrd/io.hpp"
#include "tsrd/solvers.hpp"
#include "tsrd/verify.hpp"

namespace tsrd {

namespace {

struct GraphInput {
    std::string graph6;
    std::string edges_file;
    std::string family;

    void attach(CLI::App* cmd) {
        auto* a = cmd->add_option("--graph6", graph6, "graph as a graph6 line");
        auto* b = cmd->add_option("--edges", edges_file, "path to an edge-list file (n m, then u v lines)");
        auto* c = cmd->add_option("--family", family, "family spec, e.g. path:6, dstar:2,2, fixed:F3");
        a->excludes(b)->excludes(c);
        b->excludes(c);
    }

    bool present() const { return !graph6.empty() || !edges_file.empty() || !family.empty(); }

    Graph load() const {
        if (!graph6.empty()) return parse_graph6(graph6);
        if (!edges_file.empty()) {
            std::ifstream in(edges_file);
            if (!in) throw Error(ErrorCode::ParseError, "cannot open " + edges_file);
            std::stringstream buffer;
            buffer << in.rdbuf();
            return parse_edge_list(buffer.str());
        }
        if (!family.empty()) return realize(FamilySpec::parse(family));
        throw Error(ErrorCode::ParseError, "no graph given (use --graph6, --edges or --family)");
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::vector<TheoremId> parse_theorem_list(const std::string& list) {
    if (list.empty()) return all_theorems();
    std::vector<TheoremId> out;
    std::stringstream ss(list);
    std::string name;
    while (std::getline(ss, name, ',')) {
        auto id = parse_theorem(name);
        if (!id) throw Error(ErrorCode::ParseError, "unknown theorem id '" + name + "'");
        out.push_back(*id);
    }
    return out;
}

int cmd_solve(const GraphInput& input, const std::string& engine_name, const std::string& param,
              std::ostream& out) {
    Graph g = input.load();
    Engine engine = Engine::BranchBound;
    if (engine_name == "oracle")
        engine = Engine::Oracle;
    else if (engine_name != "bb")
        throw Error(ErrorCode::ParseError, "engine must be 'oracle' or 'bb'");
    ParamBundle bundle = compute_bundle(g, engine);
    if (param.empty()) {
        out << param_bundle_json(bundle) << "\n";
        return 0;
    }
    auto id = parse_param(param);
    if (!id) throw Error(ErrorCode::ParseError, "unknown parameter '" + param + "'");
    nlohmann::ordered_json j;
    std::optional<int> value;
    switch (*id) {
        case ParamId::Gamma: value = bundle.gamma; break;
        case ParamId::GammaT: value = bundle.gamma_t; break;
        case ParamId::GammaR: value = bundle.gamma_r; break;
        case ParamId::GammaTR: value = bundle.gamma_tr; break;
        case ParamId::GammaStR: value = bundle.gamma_strd; break;
        case ParamId::GammaTStR: value = bundle.gamma_tstrd; break;
    }
    j[param] = value ? nlohmann::json(*value) : nlohmann::json(nullptr);
    out << j.dump() << "\n";
    return 0;
}

int cmd_validate(const GraphInput& input, const std::string& labels_file,
                 const std::string& function_class, std::ostream& out) {
    LabelingDocument doc = parse_labeling_document(read_file(labels_file));
    Graph g = [&] {
        if (input.present()) return input.load();
        if (doc.graph6) return parse_graph6(*doc.graph6);
        if (doc.edges_path) return parse_edge_list(read_file(*doc.edges_path));
        throw Error(ErrorCode::ParseError, "no graph given and none referenced by the document");
    }();
    Labeling f(doc.labels);
    Verdict verdict;
    if (function_class == "rd")
        verdict = validate_rd(g, f);
    else if (function_class == "trd")
        verdict = validate_trd(g, f);
    else if (function_class == "strd")
        verdict = validate_strd(g, f);
    else if (function_class == "tstrd")
        verdict = validate_tstrd(g, f);
    else
        throw Error(ErrorCode::ParseError, "class must be rd, trd, strd or tstrd");
    out << verdict_json(verdict) << "\n";
    return verdict.valid ? 0 : 1;
}

int cmd_family(const std::string& spec_text, std::ostream& out) {
    FamilySpec spec = FamilySpec::parse(spec_text);
    Graph g = realize(spec);
    nlohmann::ordered_json j;
    j["spec"] = spec.text;
    j["graph6"] = emit_graph6(g);
    j["order"] = g.order();
    j["edges"] = g.size();
    nlohmann::ordered_json forms;
    for (ParamId id : {ParamId::Gamma, ParamId::GammaT, ParamId::GammaR, ParamId::GammaTR,
                       ParamId::GammaStR, ParamId::GammaTStR})
        if (has_closed_form(spec, id)) forms[to_string(id)] = closed_form(spec, id);
    j["closed_forms"] = std::move(forms);
    out << j.dump() << "\n";
    return 0;
}

int cmd_construct(const GraphInput& input, const std::string& name, std::ostream& out) {
    Graph g = input.load();
    CertifiedLabeling cert = [&] {
        if (name == "matching") return construct_matching_bound(g);
        if (name == "mindeg") return construct_mindeg_bound(g);
        if (name == "diam2") return construct_diam2_bound(g);
        if (name == "diampath") return construct_diametral_path_bound(g);
        if (name == "girthcycle") return construct_girth_cycle_bound(g);
        if (name == "domset") return construct_domset_bound(g);
        if (name == "totaldomset") return construct_total_domset_bound(g);
        throw Error(ErrorCode::ParseError, "unknown construction '" + name + "'");
    }();
    out << certified_labeling_json(cert) << "\n";
    return 0;
}

Corpus parse_corpus_options(int all_connected, int all_trees, const std::string& random_spec) {
    int given = (all_connected > 0) + (all_trees > 0) + (!random_spec.empty() ? 1 : 0);
    if (given != 1)
        throw Error(ErrorCode::ParseError,
                    "choose exactly one of --all-connected, --all-trees, --random");
    if (all_connected > 0) return Corpus::all_connected(all_connected);
    if (all_trees > 0) return Corpus::all_trees(all_trees);
    std::stringstream ss(random_spec);
    std::string part;
    std::vector<std::string> parts;
    while (std::getline(ss, part, ',')) parts.push_back(part);
    if (parts.size() != 4)
        throw Error(ErrorCode::ParseError, "--random wants COUNT,N,P,SEED");
    return Corpus::random(std::stoi(parts[0]), std::stoi(parts[1]), std::stod(parts[2]),
                          std::stoull(parts[3]));
}

int cmd_sweep(const Corpus& corpus, const std::string& theorem_list, const std::string& out_prefix,
              std::ostream& out) {
    std::vector<TheoremId> ids = parse_theorem_list(theorem_list);
    Report report = sweep(corpus, ids);
    for (TheoremId id : ids) {
        const TheoremSummary& s = report.summary[id];
        out << to_string(id) << ": applicable=" << s.applicable << " holds=" << s.holds
            << " equality=" << s.equality << " violations=" << s.violations << "\n";
    }
    out << "graphs=" << report.rows.size() << " violations=" << report.violations.size() << "\n";
    if (!out_prefix.empty()) {
        std::ofstream csv(out_prefix + ".csv");
        write_report_csv(report, csv);
        std::ofstream json_out(out_prefix + ".json");
        write_report_json(report, json_out);
        out << "wrote " << out_prefix << ".csv and " << out_prefix << ".json\n";
    }
    return report.violations.empty() ? 0 : 1;
}

int cmd_nordhaus(int max_n, std::ostream& out) {
    if (max_n < 4 || max_n > 8)
        throw Error(ErrorCode::ParseError, "--max-n must be between 4 and 8");
    int violations = 0;
    for (int n = 4; n <= max_n; ++n) {
        int pairs = 0, equality = 0;
        int min_sum = 0, max_sum = 0;
        bool first = true;
        for (const Graph& g : connected_graphs(n)) {
            Graph co = complement(g);
            if (!is_connected(co)) continue;
            ++pairs;
            int sum = gamma_tstrd(g) + gamma_tstrd(co);
            if (first || sum < min_sum) min_sum = sum;
            if (first || sum > max_sum) max_sum = sum;
            first = false;
            bool is_p4 = is_path_graph(g) && n == 4;
            if (sum < 8 || sum > 2 * n || (sum == 2 * n) != is_p4) {
                ++violations;
                out << "violation at " << emit_graph6(g) << " sum=" << sum << "\n";
            }
            if (sum == 2 * n) ++equality;
        }
        out << "n=" << n << " pairs=" << pairs << " sum_range=[" << min_sum << "," << max_sum
            << "] sum=2n count=" << equality << "\n";
    }
    return violations == 0 ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact solvers and theorem checks for total strong Roman domination"};
    app.require_subcommand(1);

    GraphInput solve_input, validate_input, construct_input;
    std::string engine = "bb", param, labels_file, function_class = "tstrd";
    std::string family_spec, construction_name, theorem_list, out_prefix, random_spec;
    int all_connected = 0, all_trees = 0, nordhaus_max = 7;

    auto* solve = app.add_subcommand("solve", "compute the six domination parameters");
    solve_input.attach(solve);
    solve->add_option("--engine", engine, "oracle or bb (default bb)");
    solve->add_option("--param", param, "print a single parameter");

    auto* validate = app.add_subcommand("validate", "validate a labeling against a function class");
    validate_input.attach(validate);
    validate->add_option("--labels", labels_file, "labeling document (JSON)")->required();
    validate->add_option("--class", function_class, "rd, trd, strd or tstrd (default tstrd)");

    auto* family = app.add_subcommand("family", "realize a family spec and print closed forms");
    family->add_option("spec", family_spec, "family spec")->required();

    auto* construct = app.add_subcommand("construct", "run a certified bound construction");
    construct->add_option("name", construction_name,
                          "matching, mindeg, diam2, diampath, girthcycle, domset, totaldomset")
        ->required();
    construct_input.attach(construct);

    auto* sweep_cmd = app.add_subcommand("sweep", "run theorem checks over a corpus");
    sweep_cmd->add_option("--all-connected", all_connected, "all connected graphs up to order N");
    sweep_cmd->add_option("--all-trees", all_trees, "all trees up to order N");
    sweep_cmd->add_option("--random", random_spec, "random corpus COUNT,N,P,SEED");
    sweep_cmd->add_option("--theorems", theorem_list, "comma-separated theorem ids (default all)");
    sweep_cmd->add_option("--out", out_prefix, "write PREFIX.csv and PREFIX.json");

    auto* nordhaus = app.add_subcommand("nordhaus", "check the complement-sum bounds");
    nordhaus->add_option("--max-n", nordhaus_max, "largest order to scan (default 7)");

    std::vector<char*> argv;
    std::string program = "tsrd";
    argv.push_back(program.data());
    std::vector<std::string> copy(args);
    for (auto& a : copy) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (solve->parsed()) return cmd_solve(solve_input, engine, param, out);
        if (validate->parsed()) return cmd_validate(validate_input, labels_file, function_class, out);
        if (family->parsed()) return cmd_family(family_spec, out);
        if (construct->parsed()) return cmd_construct(construct_input, construction_name, out);
        if (sweep_cmd->parsed())
            return cmd_sweep(parse_corpus_options(all_connected, all_trees, random_spec),
                             theorem_list, out_prefix, out);
        if (nordhaus->parsed()) return cmd_nordhaus(nordhaus_max, out);
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace tsrd
