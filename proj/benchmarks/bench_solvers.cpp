#include <benchmark/benchmark.h>

#include "tsrd/corpus.hpp"
#include "tsrd/families.hpp"
#include "tsrd/io.hpp"
#include "tsrd/solvers.hpp"

using namespace tsrd;

namespace {

Graph petersen() {
    return Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                      {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},
                      {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
}

void bench_tstrd_oracle_path(benchmark::State& state) {
    Graph g = realize(FamilySpec::path(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(gamma_tstrd(g, Engine::Oracle));
}
BENCHMARK(bench_tstrd_oracle_path)->Arg(6)->Arg(8)->Arg(10);

void bench_tstrd_bb_path(benchmark::State& state) {
    Graph g = realize(FamilySpec::path(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(gamma_tstrd(g, Engine::BranchBound));
}
BENCHMARK(bench_tstrd_bb_path)->Arg(6)->Arg(10)->Arg(14);

void bench_tstrd_bb_petersen(benchmark::State& state) {
    Graph g = petersen();
    for (auto _ : state) benchmark::DoNotOptimize(gamma_tstrd(g, Engine::BranchBound));
}
BENCHMARK(bench_tstrd_bb_petersen);

void bench_profile_petersen(benchmark::State& state) {
    Graph g = petersen();
    for (auto _ : state) benchmark::DoNotOptimize(profile(g));
}
BENCHMARK(bench_profile_petersen);

void bench_connected_corpus(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(connected_graphs(static_cast<int>(state.range(0))));
}
BENCHMARK(bench_connected_corpus)->Arg(5)->Arg(6);

void bench_graph6_round_trip(benchmark::State& state) {
    Graph g = petersen();
    for (auto _ : state) {
        std::string line = emit_graph6(g);
        benchmark::DoNotOptimize(parse_graph6(line));
    }
}
BENCHMARK(bench_graph6_round_trip);

}  // namespace

BENCHMARK_MAIN();
