#include <benchmark/benchmark.h>

#include "qsl2/coalgebra.hpp"
#include "qsl2/reps.hpp"
#include "qsl2/ribbon.hpp"

namespace {

void BM_qfact(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qsl2::qfact(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_qfact)->Arg(4)->Arg(8);

void BM_build_rep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qsl2::build_rep(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_build_rep)->Arg(2)->Arg(5);

void BM_gamma_table(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qsl2::gamma_table(2, 2));
}
BENCHMARK(BM_gamma_table);

void BM_r_matrix(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        qsl2::r_matrix(static_cast<int>(state.range(0)), static_cast<int>(state.range(0))));
}
BENCHMARK(BM_r_matrix)->Arg(1)->Arg(2);

} // namespace

BENCHMARK_MAIN();
