#include <benchmark/benchmark.h>

#include "cayley/abelian.hpp"
#include "cayley/factor.hpp"
#include "cayley/search.hpp"

namespace {

using namespace cayley;

void BM_VerifyTriple(benchmark::State& state) {
    const auto t = table1_pm_d(static_cast<int>(state.range(0)), 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_triple(t.S, t.T, t.U).ok);
}
BENCHMARK(BM_VerifyTriple)->Arg(11)->Arg(101)->Arg(1001);

void BM_MatrixCrossCheck(benchmark::State& state) {
    const auto t = table1_pm_d(static_cast<int>(state.range(0)), 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(matrix_cross_check(t.S, t.T, t.U));
}
BENCHMARK(BM_MatrixCrossCheck)->Arg(11)->Arg(64);

void BM_NearFactorizationCensus(benchmark::State& state) {
    const auto g = FiniteGroup::cyclic(static_cast<int>(state.range(0)));
    SearchOptions opts;
    opts.threads = static_cast<int>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(near_factorization_census(g, opts).triples.size());
}
BENCHMARK(BM_NearFactorizationCensus)->Args({13, 1})->Args({17, 1})->Args({17, 4});

void BM_EnumerateTriples(benchmark::State& state) {
    const auto g = FiniteGroup::dihedral(static_cast<int>(state.range(0)));
    SearchOptions opts;
    opts.max_s = opts.max_t = 3;
    opts.threads = static_cast<int>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_triples(g, opts).triples.size());
}
BENCHMARK(BM_EnumerateTriples)->Args({5, 1})->Args({7, 1})->Args({7, 4});

void BM_Dstar(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(dstar(static_cast<int>(state.range(0))).d);
}
BENCHMARK(BM_Dstar)->Arg(16)->Arg(24);

}  // namespace

BENCHMARK_MAIN();
