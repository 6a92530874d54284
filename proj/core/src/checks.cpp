#include "tsrd/verify.hpp"

namespace tsrd {

namespace {

constexpr int kEnumerationCap = 10;

struct CheckContext {
    const Graph& g;
    StructuralProfile prof;
    ParamBundle bundle;
    mutable std::optional<OptimalSet> optimal;

    const OptimalSet& optimal_set() const {
        if (!optimal) optimal = enumerate_optimal_tstrd(g, kEnumerationCap);
        return *optimal;
    }
};

std::string fmt(const char* name, int value) {
    return std::string(name) + "=" + std::to_string(value);
}

CheckOutcome not_applicable(TheoremId id, const std::string& why) {
    CheckOutcome out;
    out.theorem = id;
    out.applicable = false;
    out.detail = why;
    return out;
}

CheckOutcome verdict(TheoremId id, bool holds, std::string detail,
                     std::optional<bool> equality = std::nullopt) {
    CheckOutcome out;
    out.theorem = id;
    out.applicable = true;
    out.holds = holds;
    out.equality = equality;
    out.detail = std::move(detail);
    return out;
}

int tstrd(const CheckContext& ctx) { return *ctx.bundle.gamma_tstrd; }

bool is_p3_or_c3(const CheckContext& ctx) {
    return ctx.g.order() == 3 && ctx.prof.is_connected;
}

CheckOutcome check_obs1(const CheckContext& ctx) {
    if (ctx.prof.has_isolated_vertex)
        return not_applicable(TheoremId::OBS1, "isolated vertex");
    int upper = ceil_div(ctx.prof.max_degree + 1, 2) * *ctx.bundle.gamma_t;
    bool holds = *ctx.bundle.gamma_tr <= tstrd(ctx) && tstrd(ctx) <= upper;
    return verdict(TheoremId::OBS1, holds,
                   fmt("gamma_tr", *ctx.bundle.gamma_tr) + " " + fmt("gamma_tstrd", tstrd(ctx)) +
                       " " + fmt("upper", upper));
}

CheckOutcome check_obs_o2(const CheckContext& ctx) {
    if (ctx.g.order() < 3 || ctx.prof.has_isolated_vertex)
        return not_applicable(TheoremId::OBS_O2, "needs order >= 3 without isolated vertices");
    bool holds = 3 <= tstrd(ctx) && tstrd(ctx) <= ctx.g.order();
    return verdict(TheoremId::OBS_O2, holds, fmt("gamma_tstrd", tstrd(ctx)),
                   tstrd(ctx) == ctx.g.order());
}

CheckOutcome check_obs_ab_impl(const CheckContext& ctx) {
    if (!ctx.prof.is_connected || ctx.g.order() < 3)
        return not_applicable(TheoremId::OBS_AB, "needs a connected graph of order >= 3");
    if (ctx.g.order() > kEnumerationCap)
        return not_applicable(TheoremId::OBS_AB, "order exceeds enumeration cap");
    std::vector<bool> leaf(ctx.g.order(), false), support(ctx.g.order(), false);
    for (int v : ctx.prof.leaves) leaf[v] = true;
    for (int v : ctx.prof.support_vertices) support[v] = true;
    for (const Labeling& f : ctx.optimal_set().functions) {
        std::string why;
        if (f.b2().size() > f.b0().size()) why = "|B2| > |B0|";
        for (int v = 0; v < ctx.g.order() && why.empty(); ++v) {
            if (leaf[v] && f[v] >= 2) why = "leaf " + std::to_string(v) + " in B2";
            if (support[v] && f[v] == 0) why = "support " + std::to_string(v) + " in B0";
        }
        if (!why.empty()) {
            auto out = verdict(TheoremId::OBS_AB, false, why + " in an optimal function");
            out.witness = f;
            return out;
        }
    }
    return verdict(TheoremId::OBS_AB, true,
                   std::to_string(ctx.optimal_set().functions.size()) + " optimal functions checked");
}

CheckOutcome check_new1(const CheckContext& ctx) {
    if (!ctx.prof.is_connected || ctx.prof.max_degree > 2)
        return not_applicable(TheoremId::NEW1, "needs a connected graph with maxdeg <= 2");
    bool holds = ctx.bundle.gamma_strd == ctx.bundle.gamma_r;
    return verdict(TheoremId::NEW1, holds,
                   fmt("gamma_strd", ctx.bundle.gamma_strd) + " " + fmt("gamma_r", ctx.bundle.gamma_r));
}

CheckOutcome check_obs_o3(const CheckContext& ctx) {
    if (!ctx.prof.is_connected || ctx.g.order() < 2 || ctx.prof.max_degree > 3)
        return not_applicable(TheoremId::OBS_O3, "needs a connected graph with maxdeg <= 3");
    bool holds = tstrd(ctx) == *ctx.bundle.gamma_tr;
    return verdict(TheoremId::OBS_O3, holds,
                   fmt("gamma_tstrd", tstrd(ctx)) + " " + fmt("gamma_tr", *ctx.bundle.gamma_tr));
}

CheckOutcome check_path_r(const CheckContext& ctx) {
    if (!is_path_graph(ctx.g) && !is_cycle_graph(ctx.g))
        return not_applicable(TheoremId::PATH_R, "needs a path or cycle");
    int expect = ceil_div(2 * ctx.g.order(), 3);
    return verdict(TheoremId::PATH_R, ctx.bundle.gamma_r == expect,
                   fmt("gamma_r", ctx.bundle.gamma_r) + " " + fmt("closed_form", expect));
}

CheckOutcome check_path_tr(const CheckContext& ctx) {
    bool applicable = (is_path_graph(ctx.g) && ctx.g.order() >= 2) || is_cycle_graph(ctx.g);
    if (!applicable) return not_applicable(TheoremId::PATH_TR, "needs a nontrivial path or cycle");
    return verdict(TheoremId::PATH_TR, *ctx.bundle.gamma_tr == ctx.g.order(),
                   fmt("gamma_tr", *ctx.bundle.gamma_tr));
}

CheckOutcome check_ah_eq_n_tr(const CheckContext& ctx) {
    if (!ctx.prof.is_connected || ctx.g.order() < 2)
        return not_applicable(TheoremId::AH_EQ_N_TR, "needs a connected graph of order >= 2");
    bool eq = *ctx.bundle.gamma_tr == ctx.g.order();
    bool member = recognize_equality_class(ctx.g, EqualityClass::ThnList);
    return verdict(TheoremId::AH_EQ_N_TR, eq == member,
                   fmt("gamma_tr", *ctx.bundle.gamma_tr) + (member ? " member" : " non-member"), eq);
}

CheckOutcome check_th4(const CheckContext& ctx) {
    if (ctx.prof.has_isolated_vertex) return not_applicable(TheoremId::TH4, "isolated vertex");
    bool eq = ctx.bundle.gamma_t == ctx.bundle.gamma_tr;
    bool member = all_components_k2(ctx.g);
    return verdict(TheoremId::TH4, eq == member,
                   fmt("gamma_t", *ctx.bundle.gamma_t) + " " + fmt("gamma_tr", *ctx.bundle.gamma_tr),
                   eq);
}

CheckOutcome check_th5(const CheckContext& ctx) {
    if (!ctx.prof.is_connected || ctx.g.order() < 3)
        return not_applicable(TheoremId::TH5, "needs a connected graph of order >= 3");
    bool eq = *ctx.bundle.gamma_tr == *ctx.bundle.gamma_t + 1;
    bool member = ctx.prof.max_degree == ctx.g.order() - 1;
    return verdict(TheoremId::TH5, eq == member,
                   fmt("gamma_tr", *ctx.bundle.gamma_tr) + " " + fmt("gamma_t", *ctx.bundle.gamma_t),
                   eq);
}

CheckOutcome check_th6(const CheckContext& ctx) {
    if (ctx.prof.has_isolated_vertex) return not_applicable(TheoremId::TH6, "isolated vertex");
    bool bound = 2 * ctx.bundle.gamma <= ctx.g.order();
    bool eq = 2 * ctx.bundle.gamma == ctx.g.order();
    bool member = every_component_c4_or_corona(ctx.g);
    return verdict(TheoremId::TH6, bound && eq == member, fmt("gamma", ctx.bundle.gamma), eq);
}

int matching_bound_value(const CheckContext& ctx) {
    return ctx.g.order() - ctx.prof.max_degree +
           ctx.prof.matching_number * ceil_half(ctx.prof.max_degree - 1);
}

CheckOutcome check_thm_s(const CheckContext& ctx) {
    if (ctx.g.order() < 4 || ctx.prof.has_isolated_vertex || is_star_graph(ctx.g))
        return not_applicable(TheoremId::THM_S, "needs order >= 4, no isolated vertex, not a star");
    int bound = matching_bound_value(ctx);
    return verdict(TheoremId::THM_S, tstrd(ctx) <= bound,
                   fmt("gamma_tstrd", tstrd(ctx)) + " " + fmt("bound", bound),
                   tstrd(ctx) == bound);
}

CheckOutcome check_thm_girth_eq(const CheckContext& ctx) {
    if (!ctx.prof.is_connected || ctx.prof.has_isolated_vertex || !ctx.prof.girth.at_least(4))
        return not_applicable(TheoremId::THM_GIRTH_EQ, "needs connected with girth >= 4");
    bool eq = tstrd(ctx) == matching_bound_value(ctx);
    bool member = recognize_equality_class(ctx.g, EqualityClass::GirthList);
    std::string detail = fmt("gamma_tstrd", tstrd(ctx)) + " " +
                         fmt("bound", matching_bound_value(ctx)) +
                         (member ? " listed" : " unlisted");
    return verdict(TheoremId::THM_GIRTH_EQ, eq == member, detail, eq);
}

CheckOutcome check_prop_mindeg(const CheckContext& ctx) {
    if (!ctx.prof.is_connected || ctx.g.order() < 2)
        return not_applicable(TheoremId::PROP_MINDEG, "needs a connected graph of order >= 2");
    int bound = ctx.g.order() - (ctx.prof.min_degree - 1) / 2;
    return verdict(TheoremId::PROP_MINDEG, tstrd(ctx) <= bound,
                   fmt("gamma_tstrd", tstrd(ctx)) + " " + fmt("bound", bound),
                   tstrd(ctx) == bound);
}

CheckOutcome check_prop_diam2(const CheckContext& ctx) {
    if (!ctx.prof.diameter || *ctx.prof.diameter != 2)
        return not_applicable(TheoremId::PROP_DIAM2, "needs diameter 2");
    int bound = ctx.prof.min_degree * (1 + ceil_half(ctx.prof.max_degree - 1)) + 1;
    return verdict(TheoremId::PROP_DIAM2, tstrd(ctx) <= bound,
                   fmt("gamma_tstrd", tstrd(ctx)) + " " + fmt("bound", bound),
                   tstrd(ctx) == bound);
}

CheckOutcome check_prop_diampath(const CheckContext& ctx) {
    if (!ctx.prof.is_connected || ctx.prof.min_degree < 3)
        return not_applicable(TheoremId::PROP_DIAMPATH, "needs connected with mindeg >= 3");
    int bound = ctx.g.order() - (*ctx.prof.diameter + 1) / 3;
    return verdict(TheoremId::PROP_DIAMPATH, tstrd(ctx) <= bound,
                   fmt("gamma_tstrd", tstrd(ctx)) + " " + fmt("bound", bound),
                   tstrd(ctx) == bound);
}

CheckOutcome check_prop_girth(const CheckContext& ctx) {
    if (!ctx.prof.is_connected || ctx.prof.min_degree < 3 || ctx.prof.girth.is_unbounded() ||
        ctx.prof.girth.length() < 4)
        return not_applicable(TheoremId::PROP_GIRTH, "needs connected, mindeg >= 3, finite girth >= 4");
    int bound = ctx.g.order() - ctx.prof.girth.length() / 3;
    return verdict(TheoremId::PROP_GIRTH, tstrd(ctx) <= bound,
                   fmt("gamma_tstrd", tstrd(ctx)) + " " + fmt("bound", bound),
                   tstrd(ctx) == bound);
}

CheckOutcome check_thm_tstrd_eq_n(const CheckContext& ctx) {
    if (!ctx.prof.is_connected || ctx.g.order() < 2)
        return not_applicable(TheoremId::THM_TSTRD_EQ_N, "needs a connected graph of order >= 2");
    bool eq = tstrd(ctx) == ctx.g.order();
    bool member = recognize_equality_class(ctx.g, EqualityClass::ThnList);
    return verdict(TheoremId::THM_TSTRD_EQ_N, eq == member,
                   fmt("gamma_tstrd", tstrd(ctx)) + (member ? " member" : " non-member"), eq);
}

CheckOutcome check_prop_ng(const CheckContext& ctx) {
    if (ctx.g.order() < 4 || !ctx.prof.is_connected)
        return not_applicable(TheoremId::PROP_NG, "needs a connected graph of order >= 4");
    Graph co = complement(ctx.g);
    if (!is_connected(co))
        return not_applicable(TheoremId::PROP_NG, "complement is disconnected");
    int sum = tstrd(ctx) + gamma_tstrd(co);
    bool eq = sum == 2 * ctx.g.order();
    bool is_p4 = is_path_graph(ctx.g) && ctx.g.order() == 4;
    bool holds = 8 <= sum && sum <= 2 * ctx.g.order() && eq == is_p4;
    return verdict(TheoremId::PROP_NG, holds, fmt("sum", sum), eq);
}

CheckOutcome check_thm_2strd(const CheckContext& ctx) {
    if (ctx.g.order() < 4 || ctx.prof.has_isolated_vertex)
        return not_applicable(TheoremId::THM_2STRD, "needs order >= 4 without isolated vertices");
    int bound = 2 * (ctx.bundle.gamma_strd - 1);
    return verdict(TheoremId::THM_2STRD, tstrd(ctx) <= bound,
                   fmt("gamma_tstrd", tstrd(ctx)) + " " + fmt("gamma_strd", ctx.bundle.gamma_strd),
                   tstrd(ctx) == bound);
}

CheckOutcome check_prop_eq_gt(const CheckContext& ctx) {
    if (ctx.prof.has_isolated_vertex)
        return not_applicable(TheoremId::PROP_EQ_GT, "isolated vertex");
    bool eq = tstrd(ctx) == *ctx.bundle.gamma_t;
    bool member = all_components_k2(ctx.g);
    return verdict(TheoremId::PROP_EQ_GT, eq == member,
                   fmt("gamma_tstrd", tstrd(ctx)) + " " + fmt("gamma_t", *ctx.bundle.gamma_t), eq);
}

CheckOutcome check_prop_gt_plus1(const CheckContext& ctx) {
    if (!ctx.prof.is_connected || ctx.g.order() < 3)
        return not_applicable(TheoremId::PROP_GT_PLUS1, "needs a connected graph of order >= 3");
    bool eq = tstrd(ctx) == *ctx.bundle.gamma_t + 1;
    bool member = is_p3_or_c3(ctx);
    return verdict(TheoremId::PROP_GT_PLUS1, eq == member,
                   fmt("gamma_tstrd", tstrd(ctx)) + " " + fmt("gamma_t", *ctx.bundle.gamma_t), eq);
}

CheckOutcome check_prop_ceil_gt_impl(const CheckContext& ctx) {
    if (ctx.prof.has_isolated_vertex || ctx.prof.max_degree <= 1)
        return not_applicable(TheoremId::PROP_CEIL_GT, "needs maxdeg > 1 without isolated vertices");
    if (ctx.g.order() > kEnumerationCap)
        return not_applicable(TheoremId::PROP_CEIL_GT, "order exceeds enumeration cap");
    bool eq = tstrd(ctx) == ceil_div(ctx.prof.max_degree + 1, 2) * *ctx.bundle.gamma_t;
    std::optional<Labeling> witness;
    for (const Labeling& f : ctx.optimal_set().functions) {
        if (!f.b1().empty()) continue;
        bool all_saturated = true;
        for (int w : f.b2()) {
            int zeros = 0;
            for (int x : ctx.g.neighbors(w))
                if (f[x] == 0) ++zeros;
            if (zeros != ctx.prof.max_degree - 1) {
                all_saturated = false;
                break;
            }
        }
        if (all_saturated) {
            witness = f;
            break;
        }
    }
    auto out = verdict(TheoremId::PROP_CEIL_GT, eq == witness.has_value(),
                       fmt("gamma_tstrd", tstrd(ctx)) + " " + fmt("gamma_t", *ctx.bundle.gamma_t) +
                           (witness ? " witness" : " no-witness"),
                       eq);
    out.witness = witness;
    return out;
}

CheckOutcome check_thm_three_impl(const CheckContext& ctx, bool with_consequence) {
    if (ctx.prof.has_isolated_vertex)
        return not_applicable(TheoremId::THM_THREE, "isolated vertex");
    int bound = (ceil_half(ctx.prof.max_degree - 1) + 2) * ctx.bundle.gamma;
    bool holds = tstrd(ctx) <= bound;
    bool eq = tstrd(ctx) == bound;
    std::string detail = fmt("gamma_tstrd", tstrd(ctx)) + " " + fmt("bound", bound);
    std::optional<std::vector<int>> witness_set;
    if (holds && eq && with_consequence) {
        for (const auto& set : all_minimum_dominating_sets(ctx.g)) {
            if (!is_efficient_dominating_set(ctx.g, set)) {
                holds = false;
                witness_set = set;
                detail += " gamma-set not efficient";
                break;
            }
            bool all_max = true;
            for (int v : set)
                if (ctx.g.degree(v) != ctx.prof.max_degree) all_max = false;
            if (!all_max) {
                holds = false;
                witness_set = set;
                detail += " gamma-set member below maximum degree";
                break;
            }
        }
    }
    auto out = verdict(TheoremId::THM_THREE, holds, detail, eq);
    out.witness_set = witness_set;
    return out;
}

CheckOutcome check_prop_3n2(const CheckContext& ctx) {
    if (!ctx.prof.is_connected || ctx.prof.has_isolated_vertex)
        return not_applicable(TheoremId::PROP_3N2, "needs a connected graph without isolated vertices");
    int sum2 = 2 * (ctx.bundle.gamma + tstrd(ctx));
    bool eq = sum2 == 3 * ctx.g.order();
    bool member = (is_cycle_graph(ctx.g) && ctx.g.order() == 4) || is_corona(ctx.g);
    bool holds = sum2 <= 3 * ctx.g.order() && eq == member;
    return verdict(TheoremId::PROP_3N2, holds,
                   fmt("gamma", ctx.bundle.gamma) + " " + fmt("gamma_tstrd", tstrd(ctx)), eq);
}

CheckOutcome check_leaves_zero_impl(const CheckContext& ctx) {
    if (!ctx.prof.is_tree) return not_applicable(TheoremId::LEM_LEAVES_ZERO, "not a tree");
    if (is_star_graph(ctx.g) || ctx.g.order() < 2)
        return not_applicable(TheoremId::LEM_LEAVES_ZERO, "stars excluded");
    if (ctx.g.order() > kEnumerationCap)
        return not_applicable(TheoremId::LEM_LEAVES_ZERO, "order exceeds enumeration cap");
    for (const Labeling& f : ctx.optimal_set().functions) {
        bool all_zero = true;
        for (int v : ctx.prof.leaves)
            if (f[v] != 0) all_zero = false;
        if (all_zero) {
            auto out = verdict(TheoremId::LEM_LEAVES_ZERO, true, "witness found");
            out.witness = f;
            return out;
        }
    }
    return verdict(TheoremId::LEM_LEAVES_ZERO, false,
                   "no optimal function labels every leaf zero");
}

CheckOutcome check_thm_tree_gt(const CheckContext& ctx) {
    if (!ctx.prof.is_tree || ctx.g.order() < 2)
        return not_applicable(TheoremId::THM_TREE_GT, "needs a nontrivial tree");
    int lower = *ctx.bundle.gamma_t + ceil_half(ctx.prof.max_degree - 1);
    return verdict(TheoremId::THM_TREE_GT, tstrd(ctx) >= lower,
                   fmt("gamma_tstrd", tstrd(ctx)) + " " + fmt("lower", lower),
                   tstrd(ctx) == lower);
}

CheckOutcome check_thm_tree_ns(const CheckContext& ctx) {
    if (!ctx.prof.is_tree || ctx.g.order() < 3)
        return not_applicable(TheoremId::THM_TREE_NS, "needs a tree of order >= 3");
    int supports = static_cast<int>(ctx.prof.support_vertices.size());
    int lower = ceil_div(ctx.g.order() + supports, ctx.prof.max_degree) + 1;
    return verdict(TheoremId::THM_TREE_NS, tstrd(ctx) >= lower,
                   fmt("gamma_tstrd", tstrd(ctx)) + " " + fmt("lower", lower),
                   tstrd(ctx) == lower);
}

CheckOutcome dispatch(const CheckContext& ctx, TheoremId id) {
    switch (id) {
        case TheoremId::OBS1: return check_obs1(ctx);
        case TheoremId::OBS_O2: return check_obs_o2(ctx);
        case TheoremId::OBS_AB: return check_obs_ab_impl(ctx);
        case TheoremId::NEW1: return check_new1(ctx);
        case TheoremId::OBS_O3: return check_obs_o3(ctx);
        case TheoremId::PATH_R: return check_path_r(ctx);
        case TheoremId::PATH_TR: return check_path_tr(ctx);
        case TheoremId::AH_EQ_N_TR: return check_ah_eq_n_tr(ctx);
        case TheoremId::TH4: return check_th4(ctx);
        case TheoremId::TH5: return check_th5(ctx);
        case TheoremId::TH6: return check_th6(ctx);
        case TheoremId::THM_S: return check_thm_s(ctx);
        case TheoremId::THM_GIRTH_EQ: return check_thm_girth_eq(ctx);
        case TheoremId::PROP_MINDEG: return check_prop_mindeg(ctx);
        case TheoremId::PROP_DIAM2: return check_prop_diam2(ctx);
        case TheoremId::PROP_DIAMPATH: return check_prop_diampath(ctx);
        case TheoremId::PROP_GIRTH: return check_prop_girth(ctx);
        case TheoremId::THM_TSTRD_EQ_N: return check_thm_tstrd_eq_n(ctx);
        case TheoremId::PROP_NG: return check_prop_ng(ctx);
        case TheoremId::THM_2STRD: return check_thm_2strd(ctx);
        case TheoremId::PROP_EQ_GT: return check_prop_eq_gt(ctx);
        case TheoremId::PROP_GT_PLUS1: return check_prop_gt_plus1(ctx);
        case TheoremId::PROP_CEIL_GT: return check_prop_ceil_gt_impl(ctx);
        case TheoremId::THM_THREE: return check_thm_three_impl(ctx, true);
        case TheoremId::PROP_3N2: return check_prop_3n2(ctx);
        case TheoremId::LEM_LEAVES_ZERO: return check_leaves_zero_impl(ctx);
        case TheoremId::THM_TREE_GT: return check_thm_tree_gt(ctx);
        case TheoremId::THM_TREE_NS: return check_thm_tree_ns(ctx);
    }
    return not_applicable(id, "unknown theorem");
}

// Checks that touch total parameters are inapplicable on graphs where those
// parameters do not exist.
bool needs_total_params(TheoremId id) {
    switch (id) {
        case TheoremId::PATH_R:
        case TheoremId::TH6:
        case TheoremId::NEW1:
            return false;
        default:
            return true;
    }
}

}  // namespace

CheckOutcome check(const Graph& g, TheoremId id, const ParamBundle& bundle) {
    CheckContext ctx{g, profile(g), bundle, std::nullopt};
    if (needs_total_params(id) &&
        (!bundle.gamma_t || !bundle.gamma_tr || !bundle.gamma_tstrd))
        return not_applicable(id, "total parameters undefined (isolated vertex)");
    return dispatch(ctx, id);
}

CheckOutcome check_obs_ab(const Graph& g, int order_cap) {
    auto prof = profile(g);
    if (!prof.is_connected || g.order() < 3)
        throw Error(ErrorCode::TooSmall, "needs a connected graph of order >= 3");
    if (g.order() > order_cap) throw Error(ErrorCode::InstanceTooLarge, "order exceeds cap");
    CheckContext ctx{g, std::move(prof), compute_bundle(g), std::nullopt};
    return check_obs_ab_impl(ctx);
}

CheckOutcome check_leaves_zero(const Graph& t, int order_cap) {
    auto prof = profile(t);
    if (!prof.is_tree) throw Error(ErrorCode::NotATree, "input is not a tree");
    if (is_star_graph(t)) throw Error(ErrorCode::StarInput, "stars have no leaf-zero optimum");
    if (t.order() > order_cap) throw Error(ErrorCode::InstanceTooLarge, "order exceeds cap");
    CheckContext ctx{t, std::move(prof), compute_bundle(t), std::nullopt};
    return check_leaves_zero_impl(ctx);
}

CheckOutcome check_ceil_gt_characterization(const Graph& g, int order_cap) {
    auto prof = profile(g);
    if (prof.has_isolated_vertex)
        throw Error(ErrorCode::IsolatedVertexInGraph, "total parameters undefined");
    if (g.order() > order_cap) throw Error(ErrorCode::InstanceTooLarge, "order exceeds cap");
    CheckContext ctx{g, std::move(prof), compute_bundle(g), std::nullopt};
    return check_prop_ceil_gt_impl(ctx);
}

CheckOutcome check_thm_three_consequence(const Graph& g, int order_cap) {
    auto prof = profile(g);
    if (prof.has_isolated_vertex)
        throw Error(ErrorCode::IsolatedVertexInGraph, "total parameters undefined");
    if (g.order() > order_cap) throw Error(ErrorCode::InstanceTooLarge, "order exceeds cap");
    CheckContext ctx{g, std::move(prof), compute_bundle(g), std::nullopt};
    return check_thm_three_impl(ctx, true);
}

}  // namespace tsrd
