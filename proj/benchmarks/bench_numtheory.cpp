#include "benchmark/benchmark.h"

#include <lensinv/numtheory.hpp>

using namespace lensinv;

static void BM_DedekindDirect(benchmark::State& state) {
    Integer p(state.range(0)), q(state.range(0) / 2 + 1);
    while (gcd(p, q) != 1) ++q;
    for (auto _ : state) benchmark::DoNotOptimize(dedekind_direct(q, p));
}
BENCHMARK(BM_DedekindDirect)->Arg(251)->Arg(2003)->Arg(20011);

static void BM_DedekindHickerson(benchmark::State& state) {
    Integer p(state.range(0)), q(state.range(0) / 2 + 1);
    while (gcd(p, q) != 1) ++q;
    for (auto _ : state) benchmark::DoNotOptimize(dedekind_hickerson(q, p));
}
BENCHMARK(BM_DedekindHickerson)->Arg(251)->Arg(2003)->Arg(20011);

static void BM_DedekindFast(benchmark::State& state) {
    Integer p(state.range(0)), q(state.range(0) / 2 + 1);
    while (gcd(p, q) != 1) ++q;
    for (auto _ : state) benchmark::DoNotOptimize(dedekind_fast(q, p));
}
BENCHMARK(BM_DedekindFast)->Arg(251)->Arg(2003)->Arg(20011)->Arg(1 << 20);

static void BM_NegContFrac(benchmark::State& state) {
    Integer p(state.range(0)), q(state.range(0) / 2 + 1);
    while (gcd(p, q) != 1) ++q;
    for (auto _ : state) benchmark::DoNotOptimize(neg_cont_frac(p, q));
}
BENCHMARK(BM_NegContFrac)->Arg(2003)->Arg(20011);
