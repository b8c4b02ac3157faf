#include <benchmark/benchmark.h>

#include "griddom/construct.hpp"

using namespace griddom;

static void BM_VerifyPlanned(benchmark::State & state)
{
    const int side = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    const Coloring c = apply_plan(plan_grid(k, side, side));
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_coloring(c));
    state.SetItemsProcessed(state.iterations() * c.dims().cells() * c.palette());
}
BENCHMARK(BM_VerifyPlanned)->Args({64, 3})->Args({256, 3})->Args({256, 6})->Args({1024, 3});

static void BM_VerifyWorkers(benchmark::State & state)
{
    const Coloring c = apply_plan(plan_grid(6, 512, 512));
    const auto workers = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_coloring(c, workers));
}
BENCHMARK(BM_VerifyWorkers)->Arg(1)->Arg(2)->Arg(4)->UseRealTime();
