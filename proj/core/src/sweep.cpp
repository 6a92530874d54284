#include <algorithm>
#include <cstdlib>
#include <thread>

#include "tsrd/io.hpp"
#include "tsrd/verify.hpp"

namespace tsrd {

namespace {

int worker_count(int requested, std::size_t jobs) {
    int workers = requested;
    if (workers <= 0) {
        if (const char* env = std::getenv("TSRD_WORKERS")) workers = std::atoi(env);
    }
    if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers <= 0) workers = 1;
    return static_cast<int>(std::min<std::size_t>(workers, std::max<std::size_t>(jobs, 1)));
}

}  // namespace

Report sweep(const Corpus& corpus, const std::vector<TheoremId>& theorems, int workers) {
    Report report;
    report.corpus = corpus.describe();
    report.theorems = theorems;

    std::vector<Graph> graphs = realize_corpus(corpus);
    report.rows.resize(graphs.size());

    // Each graph is independent; workers take strided slices (balances the
    // large orders, which sit at the end of generated corpora) and rows are
    // merged by index, so the outcome does not depend on the worker count.
    auto work = [&](std::size_t first, std::size_t stride) {
        for (std::size_t i = first; i < graphs.size(); i += stride) {
            const Graph& g = graphs[i];
            SweepRow& row = report.rows[i];
            auto prof = profile(g);
            row.graph6 = emit_graph6(g);
            row.n = g.order();
            row.m = g.size();
            row.max_degree = prof.max_degree;
            row.min_degree = prof.min_degree;
            row.girth = prof.girth;
            row.diameter = prof.diameter;
            row.params = compute_bundle(g);
            row.verdicts.reserve(theorems.size());
            for (TheoremId id : theorems) {
                CheckOutcome outcome = check(g, id, row.params);
                RowVerdict v = RowVerdict::NotApplicable;
                if (outcome.applicable) {
                    if (!outcome.holds)
                        v = RowVerdict::Violation;
                    else if (outcome.equality.value_or(false))
                        v = RowVerdict::HoldsWithEquality;
                    else
                        v = RowVerdict::Holds;
                }
                row.verdicts.push_back(v);
            }
        }
    };

    int count = worker_count(workers, graphs.size());
    if (count <= 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < count; ++w) pool.emplace_back(work, w, count);
        for (auto& t : pool) t.join();
    }

    // Aggregate sequentially; violations re-run the check to capture
    // witnesses (rare path, keeps the hot loop lean).
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const SweepRow& row = report.rows[i];
        for (std::size_t t = 0; t < theorems.size(); ++t) {
            TheoremSummary& s = report.summary[theorems[t]];
            switch (row.verdicts[t]) {
                case RowVerdict::NotApplicable: break;
                case RowVerdict::Holds:
                    ++s.applicable;
                    ++s.holds;
                    break;
                case RowVerdict::HoldsWithEquality:
                    ++s.applicable;
                    ++s.holds;
                    ++s.equality;
                    break;
                case RowVerdict::Violation: {
                    ++s.applicable;
                    ++s.violations;
                    CheckOutcome outcome = check(graphs[i], theorems[t], row.params);
                    report.violations.push_back({row.graph6, theorems[t], outcome.detail,
                                                 outcome.witness, outcome.witness_set});
                    break;
                }
            }
        }
    }
    return report;
}

}  // namespace tsrd
