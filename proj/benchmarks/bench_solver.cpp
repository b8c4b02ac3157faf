#include <benchmark/benchmark.h>

#include "griddom/solver.hpp"

using namespace griddom;

static void BM_Feasible(benchmark::State & state)
{
    const GridDims dims(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    const int t = static_cast<int>(state.range(2));
    std::uint64_t nodes = 0;
    for (auto _ : state) {
        const auto r = feasible(dims, 3, t);
        nodes += r.nodes;
        benchmark::DoNotOptimize(r.status);
    }
    state.counters["nodes"] = benchmark::Counter(static_cast<double>(nodes), benchmark::Counter::kAvgIterations);
}
BENCHMARK(BM_Feasible)->Args({4, 4, 8})->Args({3, 5, 8})->Args({4, 6, 9})->Args({5, 5, 9})->Args({6, 6, 10});

static void BM_ExactSymmetry(benchmark::State & state)
{
    SolveConfig cfg;
    cfg.symmetry_breaking = state.range(0) != 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(exact_domatic_number(GridDims(4, 4), 3, cfg).value);
}
BENCHMARK(BM_ExactSymmetry)->Arg(0)->Arg(1);
