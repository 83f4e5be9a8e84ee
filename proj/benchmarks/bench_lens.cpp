#include "benchmark/benchmark.h"

#include <lensinv/lens.hpp>
#include <lensinv/search.hpp>

using namespace lensinv;

static void BM_Xi(benchmark::State& state) {
    LensSpace L = lens_normalize(25, 6);
    long r = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(xi(L, r));
}
BENCHMARK(BM_Xi)->Arg(15)->Arg(199);

static void BM_XiRatio(benchmark::State& state) {
    LensSpace L1 = lens_normalize(25, 11), L2 = lens_normalize(25, 6);
    long r = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(xi_ratio(L1, L2, r));
}
BENCHMARK(BM_XiRatio)->Arg(15)->Arg(195);

static void BM_TauSeries(benchmark::State& state) {
    LensSpace L = lens_normalize(25, 6);
    int order = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(tau_series(L, order));
}
BENCHMARK(BM_TauSeries)->Arg(12)->Arg(40);

static void BM_FindTauTwins(benchmark::State& state) {
    Integer pmax(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(find_tau_twins(pmax));
}
BENCHMARK(BM_FindTauTwins)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);
