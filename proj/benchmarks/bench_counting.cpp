#include "rigi/bounds.hpp"
#include "rigi/elimination.hpp"
#include "rigi/graph.hpp"
#include "rigi/orientation.hpp"
#include "rigi/permanent.hpp"
#include "rigi/pseudograph.hpp"
#include "rigi/rigidity.hpp"

#include <benchmark/benchmark.h>

using namespace rigi;

static void BM_CountOrientations(benchmark::State &state) {
    const Graph g = henneberg1_generate(static_cast<int>(state.range(0)), 2, 1);
    const Pseudograph L = build_pseudograph(g, find_cliques(g, 2).front());
    for (auto _ : state)
        benchmark::DoNotOptimize(count_valid_orientations(L, 2).count);
}
BENCHMARK(BM_CountOrientations)->DenseRange(8, 16, 2);

static void BM_CountOrientationsD3(benchmark::State &state) {
    const Graph g = henneberg1_generate(static_cast<int>(state.range(0)), 3, 1);
    const Pseudograph L = build_pseudograph(g, find_cliques(g, 3).front());
    for (auto _ : state)
        benchmark::DoNotOptimize(count_valid_orientations(L, 3).count);
}
BENCHMARK(BM_CountOrientationsD3)->DenseRange(8, 12, 2);

static void BM_IncidencePermanent(benchmark::State &state) {
    const Graph g = henneberg1_generate(static_cast<int>(state.range(0)), 2, 1);
    const auto clique = find_cliques(g, 2).front();
    for (auto _ : state)
        benchmark::DoNotOptimize(incidence_permanent(g, clique, 2));
}
BENCHMARK(BM_IncidencePermanent)->DenseRange(8, 12, 1);

static void BM_Eliminate(benchmark::State &state) {
    const Graph g = henneberg1_generate(static_cast<int>(state.range(0)), 2, 1);
    const Pseudograph L = build_pseudograph(g, find_cliques(g, 2).front());
    for (auto _ : state)
        benchmark::DoNotOptimize(eliminate(L, 2).product_bound);
}
BENCHMARK(BM_Eliminate)->DenseRange(8, 24, 4);

static void BM_PebbleGame(benchmark::State &state) {
    const Graph g = henneberg1_generate(static_cast<int>(state.range(0)), 2, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(maxwell_check(g, 2).global_ok);
}
BENCHMARK(BM_PebbleGame)->RangeMultiplier(2)->Range(8, 64);

static void BM_AlphaBeta(benchmark::State &state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(alpha_beta(static_cast<int>(state.range(0))).alpha);
}
BENCHMARK(BM_AlphaBeta)->Arg(2)->Arg(8)->Arg(32)->Arg(64);

BENCHMARK_MAIN();
