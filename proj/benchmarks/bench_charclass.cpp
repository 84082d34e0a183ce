#include <benchmark/benchmark.h>

#include "coinc/certify.hpp"
#include "coinc/charclass.hpp"

using namespace coinc;

static void BM_ComputeS(benchmark::State& state) {
  const int q = int(state.range(0)), d = int(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(charclass::compute_s(q, d));
}
BENCHMARK(BM_ComputeS)->Args({2, 6})->Args({4, 0})->Args({4, 1})->Args({4, 2})->Args({4, 3})->Unit(benchmark::kMillisecond);

static void BM_ComputeSExpanded(benchmark::State& state) {
  const int d = int(state.range(0));
  const int mu = charclass::default_mu(4, d);
  for (auto _ : state) benchmark::DoNotOptimize(charclass::compute_s_expanded(4, d, mu + d, mu));
}
BENCHMARK(BM_ComputeSExpanded)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);

static void BM_AlphaClass(benchmark::State& state) {
  const auto p = std::uint32_t(state.range(0));
  const int i = int(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(charclass::alpha_class(p, i));
}
BENCHMARK(BM_AlphaClass)->Args({3, 4})->Args({5, 3})->Args({7, 3})->Unit(benchmark::kMillisecond);

static void BM_Theorem3Table(benchmark::State& state) {
  const int l = int(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(certify::theorem3_table(l));
}
BENCHMARK(BM_Theorem3Table)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
