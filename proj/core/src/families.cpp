#include "tsrd/families.hpp"

#include <sstream>

namespace tsrd {

const char* to_string(ParamId id) {
    switch (id) {
        case ParamId::Gamma: return "gamma";
        case ParamId::GammaT: return "gamma_t";
        case ParamId::GammaR: return "gamma_r";
        case ParamId::GammaTR: return "gamma_tr";
        case ParamId::GammaStR: return "gamma_strd";
        case ParamId::GammaTStR: return "gamma_tstrd";
    }
    return "";
}

std::optional<ParamId> parse_param(const std::string& name) {
    for (ParamId id : {ParamId::Gamma, ParamId::GammaT, ParamId::GammaR, ParamId::GammaTR,
                       ParamId::GammaStR, ParamId::GammaTStR})
        if (name == to_string(id)) return id;
    return std::nullopt;
}

namespace {

[[noreturn]] void bad_params(const std::string& what) {
    throw Error(ErrorCode::InvalidFamilyParams, what);
}

}  // namespace

FamilySpec FamilySpec::path(int n) {
    if (n < 1) bad_params("path needs n >= 1");
    FamilySpec s;
    s.kind = Kind::Path;
    s.a = n;
    s.text = "path:" + std::to_string(n);
    return s;
}

FamilySpec FamilySpec::cycle(int n) {
    if (n < 3) bad_params("cycle needs n >= 3");
    FamilySpec s;
    s.kind = Kind::Cycle;
    s.a = n;
    s.text = "cycle:" + std::to_string(n);
    return s;
}

FamilySpec FamilySpec::star(int order) {
    if (order < 2) bad_params("star needs order >= 2");
    FamilySpec s;
    s.kind = Kind::Star;
    s.a = order;
    s.text = "star:" + std::to_string(order);
    return s;
}

FamilySpec FamilySpec::double_star(int p, int q) {
    // DS_{p,q} and DS_{q,p} are the same graph; require only p,q >= 1.
    if (p < 1 || q < 1) bad_params("double star needs p,q >= 1");
    FamilySpec s;
    s.kind = Kind::DoubleStar;
    s.a = p;
    s.b = q;
    s.text = "dstar:" + std::to_string(p) + "," + std::to_string(q);
    return s;
}

FamilySpec FamilySpec::corona(Graph base) {
    FamilySpec s;
    s.kind = Kind::Corona;
    s.text = "corona:<" + std::to_string(base.order()) + "-vertex base>";
    s.base = std::move(base);
    return s;
}

FamilySpec FamilySpec::subdivided_star(int k) {
    if (k < 1) bad_params("subdivided star needs k >= 1");
    FamilySpec s;
    s.kind = Kind::SubdividedStar;
    s.a = k;
    s.text = "subdivstar:" + std::to_string(k);
    return s;
}

FamilySpec FamilySpec::family_g(int k1, int k2) {
    if (k1 < 0 || k2 < 0 || k1 + k2 < 1) bad_params("family G needs k1,k2 >= 0 and k1+k2 >= 1");
    FamilySpec s;
    s.kind = Kind::FamilyG;
    s.a = k1;
    s.b = k2;
    s.text = "famG:" + std::to_string(k1) + "," + std::to_string(k2);
    return s;
}

FamilySpec FamilySpec::family_h(int p, int q, int r) {
    if (p < 1 || q < 1 || r < 0) bad_params("family H needs p,q >= 1 and r >= 0");
    FamilySpec s;
    s.kind = Kind::FamilyH;
    s.a = p;
    s.b = q;
    s.c = r;
    s.text = "famH:" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r);
    return s;
}

FamilySpec FamilySpec::fixed(FixedGraphId id) {
    FamilySpec s;
    s.kind = Kind::Fixed;
    s.fixed_id = id;
    static const char* names[] = {"F1", "F2", "F3", "F4", "F5", "S_K13"};
    s.text = std::string("fixed:") + names[static_cast<int>(id)];
    return s;
}

namespace {

std::vector<int> parse_ints(const std::string& text, int expected) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            size_t pos = 0;
            out.push_back(std::stoi(part, &pos));
            if (pos != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, "bad integer '" + part + "'");
        }
    }
    if (static_cast<int>(out.size()) != expected)
        throw Error(ErrorCode::ParseError,
                    "expected " + std::to_string(expected) + " arguments in '" + text + "'");
    return out;
}

}  // namespace

FamilySpec FamilySpec::parse(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw Error(ErrorCode::ParseError, "family spec needs kind:args, got '" + text + "'");
    std::string kind = text.substr(0, colon);
    std::string rest = text.substr(colon + 1);
    if (kind == "path") return path(parse_ints(rest, 1)[0]);
    if (kind == "cycle") return cycle(parse_ints(rest, 1)[0]);
    if (kind == "star") return star(parse_ints(rest, 1)[0]);
    if (kind == "dstar") {
        auto v = parse_ints(rest, 2);
        return double_star(v[0], v[1]);
    }
    if (kind == "subdivstar") return subdivided_star(parse_ints(rest, 1)[0]);
    if (kind == "famG") {
        auto v = parse_ints(rest, 2);
        return family_g(v[0], v[1]);
    }
    if (kind == "famH") {
        auto v = parse_ints(rest, 3);
        return family_h(v[0], v[1], v[2]);
    }
    if (kind == "corona") {
        auto spec = corona(realize(FamilySpec::parse(rest)));
        spec.text = "corona:" + rest;
        return spec;
    }
    if (kind == "fixed") {
        static const std::pair<const char*, FixedGraphId> ids[] = {
            {"F1", FixedGraphId::F1},   {"F2", FixedGraphId::F2}, {"F3", FixedGraphId::F3},
            {"F4", FixedGraphId::F4},   {"F5", FixedGraphId::F5}, {"S_K13", FixedGraphId::SK13},
        };
        for (auto [name, id] : ids)
            if (rest == name) return fixed(id);
        throw Error(ErrorCode::ParseError, "unknown fixed graph '" + rest + "'");
    }
    throw Error(ErrorCode::ParseError, "unknown family kind '" + kind + "'");
}

namespace {

Graph make_path(int n) {
    std::vector<VertexPair> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph(n, edges);
}

Graph make_cycle(int n) {
    std::vector<VertexPair> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return Graph(n, edges);
}

Graph make_star(int order) {
    std::vector<VertexPair> edges;
    for (int i = 1; i < order; ++i) edges.push_back({0, i});
    return Graph(order, edges);
}

Graph make_double_star(int p, int q) {
    std::vector<VertexPair> edges{{0, 1}};
    for (int i = 0; i < p; ++i) edges.push_back({0, 2 + i});
    for (int i = 0; i < q; ++i) edges.push_back({1, 2 + p + i});
    return Graph(2 + p + q, edges);
}

Graph make_corona(const Graph& base) {
    int b = base.order();
    std::vector<VertexPair> edges = base.edges();
    for (int i = 0; i < b; ++i) edges.push_back({i, b + i});
    return Graph(2 * b, edges);
}

Graph make_subdivided_star(int k) {
    std::vector<VertexPair> edges;
    for (int i = 1; i <= k; ++i) {
        edges.push_back({0, i});
        edges.push_back({i, k + i});
    }
    return Graph(2 * k + 1, edges);
}

Graph make_family_g(int k1, int k2) {
    std::vector<VertexPair> edges{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    int next = 4;
    for (int i = 0; i < k1; ++i) {
        edges.push_back({0, next});
        edges.push_back({next, next + 1});
        next += 2;
    }
    for (int i = 0; i < k2; ++i) {
        edges.push_back({1, next});
        edges.push_back({next, next + 1});
        next += 2;
    }
    return Graph(next, edges);
}

Graph make_family_h(int p, int q, int r) {
    std::vector<VertexPair> edges;
    // Central path 0 - 2 - 3 - ... - (r+1) - 1 (direct edge 0-1 when r=0).
    if (r == 0) {
        edges.push_back({0, 1});
    } else {
        edges.push_back({0, 2});
        for (int i = 0; i + 1 < r; ++i) edges.push_back({2 + i, 3 + i});
        edges.push_back({r + 1, 1});
    }
    int next = 2 + r;
    for (int i = 0; i < p; ++i) {
        edges.push_back({0, next});
        edges.push_back({next, next + 1});
        next += 2;
    }
    for (int i = 0; i < q; ++i) {
        edges.push_back({1, next});
        edges.push_back({next, next + 1});
        next += 2;
    }
    return Graph(next, edges);
}

}  // namespace

Graph fixed_graph(FixedGraphId id) {
    switch (id) {
        case FixedGraphId::F1:
            // Double star DS_{1,2} with its central edge subdivided once.
            return Graph(6, {{0, 1}, {1, 2}, {0, 3}, {0, 4}, {2, 5}});
        case FixedGraphId::F2:
            // 4-cycle 0-1-2-4 with pendants 3 on 0 and 5 on 2.
            return Graph(6, {{0, 1}, {1, 2}, {2, 4}, {0, 4}, {0, 3}, {2, 5}});
        case FixedGraphId::F3:
            return Graph(6, {{0, 1}, {1, 2}, {0, 3}, {0, 4}, {2, 3}, {2, 4}, {2, 5}});
        case FixedGraphId::F4:
            // 4-cycle with one pendant.
            return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}});
        case FixedGraphId::F5:
            return Graph(5, {{0, 1}, {1, 2}, {0, 3}, {0, 4}, {2, 3}, {2, 4}});
        case FixedGraphId::SK13:
            return make_subdivided_star(3);
    }
    bad_params("unknown fixed graph");
}

Graph realize(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilySpec::Kind::Path: return make_path(spec.a);
        case FamilySpec::Kind::Cycle: return make_cycle(spec.a);
        case FamilySpec::Kind::Star: return make_star(spec.a);
        case FamilySpec::Kind::DoubleStar: return make_double_star(spec.a, spec.b);
        case FamilySpec::Kind::Corona: return make_corona(*spec.base);
        case FamilySpec::Kind::SubdividedStar: return make_subdivided_star(spec.a);
        case FamilySpec::Kind::FamilyG: return make_family_g(spec.a, spec.b);
        case FamilySpec::Kind::FamilyH: return make_family_h(spec.a, spec.b, spec.c);
        case FamilySpec::Kind::Fixed: return fixed_graph(spec.fixed_id);
    }
    bad_params("unknown family kind");
}

bool has_closed_form(const FamilySpec& spec, ParamId param) {
    switch (spec.kind) {
        case FamilySpec::Kind::Path:
            if (param == ParamId::GammaR) return true;
            return (param == ParamId::GammaTR || param == ParamId::GammaTStR) && spec.a >= 2;
        case FamilySpec::Kind::Cycle:
            return param == ParamId::GammaR || param == ParamId::GammaTR ||
                   param == ParamId::GammaTStR;
        case FamilySpec::Kind::Star:
        case FamilySpec::Kind::DoubleStar:
            return param == ParamId::GammaTStR;
        default:
            return false;
    }
}

int closed_form(const FamilySpec& spec, ParamId param) {
    if (!has_closed_form(spec, param))
        throw Error(ErrorCode::NoClosedForm,
                    spec.text + " has no known closed form for " + to_string(param));
    switch (spec.kind) {
        case FamilySpec::Kind::Path:
        case FamilySpec::Kind::Cycle: {
            int n = spec.a;
            if (param == ParamId::GammaR) return ceil_div(2 * n, 3);
            return n;  // gamma_tr and gamma_tstrd coincide with the order
        }
        case FamilySpec::Kind::Star:
            return ceil_div(spec.a + 2, 2);
        case FamilySpec::Kind::DoubleStar:
            return ceil_half(spec.a) + ceil_half(spec.b) + 2;
        default:
            break;
    }
    throw Error(ErrorCode::NoClosedForm, spec.text);
}

}  // namespace tsrd
