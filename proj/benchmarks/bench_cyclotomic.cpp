#include "benchmark/benchmark.h"

#include <lensinv/cyclotomic.hpp>

using namespace lensinv;

static void BM_CycloPolyLookup(benchmark::State& state) {
    long n = state.range(0);
    cyclo_poly(n);  // warm the cache; steady-state cost is the lookup
    for (auto _ : state) benchmark::DoNotOptimize(cyclo_poly(n).degree());
}
BENCHMARK(BM_CycloPolyLookup)->Arg(105)->Arg(4975);

static void BM_GaussSum(benchmark::State& state) {
    long c = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(gauss_eps_sqrt(c));
}
BENCHMARK(BM_GaussSum)->Arg(25)->Arg(99);

static void BM_GenericMul(benchmark::State& state) {
    long n = state.range(0);
    CycloElement x = root_of_unity(n, 1) + root_of_unity(n, 2);
    CycloElement y = root_of_unity(n, 3) - root_of_unity(n, 5);
    for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_GenericMul)->Arg(60)->Arg(315);

static void BM_Inverse(benchmark::State& state) {
    long n = state.range(0);
    CycloElement x = root_of_unity(n, 2) - root_of_unity(n, -2);
    for (auto _ : state) benchmark::DoNotOptimize(x.inverse());
}
BENCHMARK(BM_Inverse)->Arg(15)->Arg(60);
