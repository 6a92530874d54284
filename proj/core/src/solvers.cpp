#include "tsrd/solvers.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace tsrd {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

std::uint64_t full_mask(int n) { return n == 64 ? ~0ull : (1ull << n) - 1; }

// Next k-subset in ascending numeric order (Gosper's hack).
std::uint64_t next_subset(std::uint64_t x) {
    std::uint64_t c = x & -x;
    std::uint64_t r = x + c;
    return (((r ^ x) >> 2) / c) | r;
}

std::vector<int> mask_to_vertices(std::uint64_t mask, int n) {
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if ((mask >> v) & 1u) out.push_back(v);
    return out;
}

std::uint64_t closed_cover(const Graph& g, std::uint64_t set) {
    std::uint64_t covered = set;
    for (int v = 0; v < g.order(); ++v)
        if ((set >> v) & 1u) covered |= g.neighbor_mask(v);
    return covered;
}

std::uint64_t open_cover(const Graph& g, std::uint64_t set) {
    std::uint64_t covered = 0;
    for (int v = 0; v < g.order(); ++v)
        if ((set >> v) & 1u) covered |= g.neighbor_mask(v);
    return covered;
}

// Smallest k for which some k-subset satisfies `covers`; returns the first
// such subset (ascending bitmask order) through `witness`.
int min_cover_size(const Graph& g, const std::function<bool(std::uint64_t)>& covers,
                   std::uint64_t* witness = nullptr) {
    int n = g.order();
    std::uint64_t all = full_mask(n);
    for (int k = 0; k <= n; ++k) {
        if (k == 0) {
            if (covers(0)) {
                if (witness) *witness = 0;
                return 0;
            }
            continue;
        }
        std::uint64_t set = (1ull << k) - 1;
        while (set <= all) {
            if (covers(set)) {
                if (witness) *witness = set;
                return k;
            }
            if (set == 0) break;
            std::uint64_t next = next_subset(set);
            if (next <= set) break;
            set = next;
        }
    }
    return kInf;
}

// Exact minimum-weight labeling by depth-first enumeration over per-vertex
// domains {0..caps[v]}, validating complete assignments. Prunes once the
// partial weight reaches the incumbent; an initial incumbent labeling may
// seed the search.
struct MinLabelSearch {
    MinLabelSearch(const Graph& graph, const std::vector<int>& label_caps,
                   const std::function<bool(const Labeling&)>& validator)
        : g(graph), caps(label_caps), valid(validator) {}

    const Graph& g;
    const std::vector<int>& caps;
    const std::function<bool(const Labeling&)>& valid;
    int best_weight = kInf;
    std::optional<Labeling> best;
    std::vector<int> current;

    void run(const std::optional<Labeling>& seed) {
        if (seed) {
            best = seed;
            best_weight = seed->weight();
        }
        current.assign(g.order(), 0);
        dfs(0, 0);
    }

    void dfs(int v, int weight) {
        if (weight >= best_weight) return;
        if (v == g.order()) {
            Labeling f(current);
            if (valid(f)) {
                best_weight = weight;
                best = std::move(f);
            }
            return;
        }
        for (int label = 0; label <= caps[v]; ++label) {
            current[v] = label;
            dfs(v + 1, weight + label);
        }
        current[v] = 0;
    }
};

std::vector<int> solver_caps(const Graph& g, int uniform_cap) {
    std::vector<int> caps(g.order());
    for (int v = 0; v < g.order(); ++v)
        caps[v] = uniform_cap > 0 ? uniform_cap : vertex_label_cap(g, v);
    return caps;
}

Labeling all_ones(const Graph& g) { return Labeling(std::vector<int>(g.order(), 1)); }

int min_labeling_weight(const Graph& g, int uniform_cap,
                        const std::function<bool(const Labeling&)>& valid,
                        const std::optional<Labeling>& seed, std::optional<Labeling>* witness) {
    auto caps = solver_caps(g, uniform_cap);
    MinLabelSearch search(g, caps, valid);
    search.run(seed);
    if (witness) *witness = search.best;
    return search.best_weight;
}

}  // namespace

bool is_dominating_set(const Graph& g, const std::vector<int>& s) {
    std::uint64_t mask = 0;
    for (int v : s) mask |= 1ull << v;
    return closed_cover(g, mask) == full_mask(g.order());
}

bool is_total_dominating_set(const Graph& g, const std::vector<int>& s) {
    std::uint64_t mask = 0;
    for (int v : s) mask |= 1ull << v;
    return open_cover(g, mask) == full_mask(g.order());
}

int gamma(const Graph& g) {
    std::uint64_t all = full_mask(g.order());
    return min_cover_size(g, [&](std::uint64_t s) { return closed_cover(g, s) == all; });
}

std::vector<int> minimum_dominating_set(const Graph& g) {
    std::uint64_t all = full_mask(g.order());
    std::uint64_t witness = 0;
    min_cover_size(g, [&](std::uint64_t s) { return closed_cover(g, s) == all; }, &witness);
    return mask_to_vertices(witness, g.order());
}

std::vector<std::vector<int>> all_minimum_dominating_sets(const Graph& g) {
    int n = g.order();
    std::uint64_t all = full_mask(n);
    int k = gamma(g);
    std::vector<std::vector<int>> sets;
    if (k == 0) return {{}};
    std::uint64_t set = (1ull << k) - 1;
    while (set <= all) {
        if (closed_cover(g, set) == all) sets.push_back(mask_to_vertices(set, n));
        std::uint64_t next = next_subset(set);
        if (next <= set) break;
        set = next;
    }
    return sets;
}

int gamma_t(const Graph& g) {
    if (has_isolated_vertex(g))
        throw Error(ErrorCode::IsolatedVertexInGraph, "total domination undefined");
    std::uint64_t all = full_mask(g.order());
    return min_cover_size(g, [&](std::uint64_t s) { return open_cover(g, s) == all; });
}

std::vector<int> minimum_total_dominating_set(const Graph& g) {
    if (has_isolated_vertex(g))
        throw Error(ErrorCode::IsolatedVertexInGraph, "total domination undefined");
    std::uint64_t all = full_mask(g.order());
    std::uint64_t witness = 0;
    min_cover_size(g, [&](std::uint64_t s) { return open_cover(g, s) == all; }, &witness);
    return mask_to_vertices(witness, g.order());
}

int gamma_r(const Graph& g) {
    auto comps = components(g);
    if (comps.size() > 1) {
        int total = 0;
        for (const auto& comp : comps) total += gamma_r(induced_subgraph(g, comp));
        return total;
    }
    return min_labeling_weight(
        g, 2, [&](const Labeling& f) { return validate_rd(g, f).valid; }, all_ones(g), nullptr);
}

int gamma_tr(const Graph& g) {
    if (has_isolated_vertex(g))
        throw Error(ErrorCode::IsolatedVertexInGraph, "total Roman domination undefined");
    auto comps = components(g);
    if (comps.size() > 1) {
        int total = 0;
        for (const auto& comp : comps) total += gamma_tr(induced_subgraph(g, comp));
        return total;
    }
    return min_labeling_weight(
        g, 2, [&](const Labeling& f) { return validate_trd(g, f).valid; }, all_ones(g), nullptr);
}

int gamma_strd(const Graph& g) {
    auto comps = components(g);
    if (comps.size() > 1) {
        int total = 0;
        for (const auto& comp : comps) total += gamma_strd(induced_subgraph(g, comp));
        return total;
    }
    return min_labeling_weight(
        g, 0, [&](const Labeling& f) { return validate_strd(g, f).valid; }, all_ones(g), nullptr);
}

Labeling optimal_strd_labeling(const Graph& g) {
    std::optional<Labeling> witness;
    min_labeling_weight(
        g, 0, [&](const Labeling& f) { return validate_strd(g, f).valid; }, all_ones(g), &witness);
    return *witness;
}

namespace {

// Plain nested enumeration over per-vertex capped domains with a validator
// check at every complete assignment; the ground-truth engine.
int oracle_tstrd(const Graph& g) {
    int n = g.order();
    std::vector<int> caps = solver_caps(g, 0);
    std::vector<int> labels(n, 0);
    int best = kInf;
    while (true) {
        Labeling f(labels);
        if (validate_tstrd(g, f).valid) best = std::min(best, f.weight());
        int v = n - 1;
        while (v >= 0 && labels[v] == caps[v]) labels[v--] = 0;
        if (v < 0) break;
        ++labels[v];
    }
    return best;
}

// Branch and bound: vertices in descending degree, per-vertex label
// domains, partial consistency pruning, full validation at leaves.
struct TstrdBranchBound {
    const Graph& g;
    int n;
    std::vector<int> order;     // visit order, descending degree
    std::vector<int> position;  // inverse of order
    std::vector<int> caps;      // aligned with vertex ids
    std::vector<int> label;     // -1 = unassigned
    int best;

    explicit TstrdBranchBound(const Graph& graph)
        : g(graph), n(graph.order()), label(graph.order(), -1), best(kInf) {
        order.resize(n);
        for (int v = 0; v < n; ++v) order[v] = v;
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
        position.resize(n);
        for (int i = 0; i < n; ++i) position[order[i]] = i;
        caps = solver_caps(g, 0);
    }

    int run() {
        best = n;  // the all-ones labeling is always a valid TStRD function
        dfs(0, 0);
        return best;
    }

    // Count of unassigned vertices that can no longer be labeled zero: all
    // their neighbors are assigned labels below two.
    int forced_positive_count(int depth) const {
        int count = 0;
        for (int i = depth; i < n; ++i) {
            int v = order[i];
            bool can_be_zero = false;
            for (int w : g.neighbors(v)) {
                if (label[w] < 0 || label[w] >= 2) {
                    can_be_zero = true;
                    break;
                }
            }
            if (!can_be_zero) ++count;
        }
        return count;
    }

    // Sound local checks once v's whole neighborhood is assigned.
    bool locally_consistent(int v) const {
        if (label[v] == 0) {
            // Needs some defender already strong enough for its current
            // zero count (counts only grow, so failure is final).
            for (int w : g.neighbors(v)) {
                if (label[w] < 0) return true;
            }
            for (int w : g.neighbors(v)) {
                if (label[w] < 2) continue;
                int zeros = 0;
                for (int x : g.neighbors(w)) {
                    if (label[x] == 0) ++zeros;
                }
                // Zero counts only grow, so a defender short now stays short.
                if (label[w] >= 1 + ceil_half(zeros)) return true;
            }
            return false;
        }
        // Positive vertex: some neighbor must still be able to be positive.
        for (int w : g.neighbors(v)) {
            if (label[w] != 0) return true;
        }
        return false;
    }

    void dfs(int depth, int weight) {
        if (weight + forced_positive_count(depth) >= best) return;
        if (depth == n) {
            std::vector<int> labels(label.begin(), label.end());
            Labeling f(labels);
            if (validate_tstrd(g, f).valid) best = weight;
            return;
        }
        int v = order[depth];
        for (int value = 0; value <= caps[v]; ++value) {
            label[v] = value;
            bool ok = true;
            // Re-check v and any neighbor whose neighborhood just closed.
            if (!locally_consistent(v)) ok = false;
            for (int w : g.neighbors(v)) {
                if (!ok) break;
                if (label[w] >= 0 && !locally_consistent(w)) ok = false;
            }
            if (ok) dfs(depth + 1, weight + value);
        }
        label[v] = -1;
    }
};

}  // namespace

int gamma_tstrd(const Graph& g, Engine engine) {
    if (has_isolated_vertex(g))
        throw Error(ErrorCode::IsolatedVertexInGraph, "total strong Roman domination undefined");
    auto comps = components(g);
    if (comps.size() > 1) {
        int total = 0;
        for (const auto& comp : comps) total += gamma_tstrd(induced_subgraph(g, comp), engine);
        return total;
    }
    if (engine == Engine::Oracle) return oracle_tstrd(g);
    TstrdBranchBound bb(g);
    return bb.run();
}

OptimalSet enumerate_optimal_tstrd(const Graph& g, int order_cap) {
    if (has_isolated_vertex(g))
        throw Error(ErrorCode::IsolatedVertexInGraph, "total strong Roman domination undefined");
    if (g.order() > order_cap)
        throw Error(ErrorCode::InstanceTooLarge, "order " + std::to_string(g.order()) +
                                                     " exceeds enumeration cap " +
                                                     std::to_string(order_cap));
    int n = g.order();
    std::vector<int> caps = solver_caps(g, 0);
    OptimalSet result;
    result.weight = kInf;
    std::vector<int> labels(n, 0);
    // Lexicographic depth-first enumeration; keep every argmin.
    std::function<void(int, int)> dfs = [&](int v, int weight) {
        if (weight > result.weight) return;
        if (v == n) {
            Labeling f(labels);
            if (!validate_tstrd(g, f).valid) return;
            if (weight < result.weight) {
                result.weight = weight;
                result.functions.clear();
            }
            result.functions.push_back(std::move(f));
            return;
        }
        for (int label = 0; label <= caps[v]; ++label) {
            labels[v] = label;
            dfs(v + 1, weight + label);
        }
        labels[v] = 0;
    };
    dfs(0, 0);
    return result;
}

bool is_efficient_dominating_set(const Graph& g, const std::vector<int>& d) {
    std::vector<int> dominators(g.order(), 0);
    for (int v : d) {
        ++dominators[v];
        for (int w : g.neighbors(v)) ++dominators[w];
    }
    return std::all_of(dominators.begin(), dominators.end(), [](int c) { return c == 1; });
}

ParamBundle compute_bundle(const Graph& g, Engine engine) {
    ParamBundle bundle;
    bundle.gamma = gamma(g);
    bundle.gamma_r = gamma_r(g);
    bundle.gamma_strd = gamma_strd(g);
    if (!has_isolated_vertex(g)) {
        bundle.gamma_t = gamma_t(g);
        bundle.gamma_tr = gamma_tr(g);
        bundle.gamma_tstrd = gamma_tstrd(g, engine);
    }
    return bundle;
}

}  // namespace tsrd
