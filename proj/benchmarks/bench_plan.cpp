#include <benchmark/benchmark.h>

#include "griddom/construct.hpp"

using namespace griddom;

static void BM_PlanAndStamp(benchmark::State & state)
{
    const int side = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(apply_plan(plan_grid(k, side, side + 1)));
}
BENCHMARK(BM_PlanAndStamp)->Args({64, 3})->Args({256, 3})->Args({256, 8})->Args({1024, 5});
