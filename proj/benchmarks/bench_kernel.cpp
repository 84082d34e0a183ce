#include <benchmark/benchmark.h>

#include <random>

#include "coinc/gpoly.hpp"
#include "coinc/symfun.hpp"

using namespace coinc;

namespace {

GradedPoly dense_poly(const Ring& ring, int terms, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Term> raw;
  for (int i = 0; i < terms; ++i) {
    std::vector<Exponent> e(ring.num_generators());
    for (auto& x : e) x = Exponent(rng() % 5);
    raw.push_back({Monomial(std::move(e)), Residue(1 + rng() % (ring.characteristic() - 1))});
  }
  return GradedPoly(ring, std::move(raw));
}

}  // namespace

static void BM_PolyMul(benchmark::State& state) {
  Ring ring = Ring::truncated(5, {{"a", 1}, {"b", 2}, {"c", 1}, {"d", 3}}, {8, 8, 8, 8});
  GradedPoly f = dense_poly(ring, int(state.range(0)), 1), g = dense_poly(ring, int(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(f * g);
}
BENCHMARK(BM_PolyMul)->RangeMultiplier(4)->Range(16, 1024);

static void BM_InvertSeries(benchmark::State& state) {
  const int m = int(state.range(0));
  Ring r = Ring::truncated(2, {{"u", 1}}, {unsigned(m + 1)});
  GradedPoly f = pow(GradedPoly::constant(r, 1) + GradedPoly::gen(r, "u"), unsigned(m + 1));
  for (auto _ : state) benchmark::DoNotOptimize(invert_unit_series(f, m));
}
BENCHMARK(BM_InvertSeries)->RangeMultiplier(4)->Range(16, 1024);

static void BM_ElementaryRewrite(benchmark::State& state) {
  const int nu = int(state.range(0)), deg = int(state.range(1));
  Ring e = symfun::elementary_ring(2, nu, 1);
  symfun::SymmetricPoly S{2, nu, {}};
  for (const auto& lambda : symfun::partitions(deg, nu)) S.coeffs[lambda] = 1;
  for (auto _ : state) benchmark::DoNotOptimize(symfun::elementary_rewrite(S, e));
}
BENCHMARK(BM_ElementaryRewrite)->Args({6, 8})->Args({14, 12})->Args({14, 16})->Unit(benchmark::kMillisecond);

static void BM_RewriteMonomialSymmetric(benchmark::State& state) {
  const int nu = int(state.range(0));
  Ring roots = symfun::roots_ring(3, {nu, 1});
  Ring e = symfun::elementary_ring(3, nu, 1);
  GradedPoly S = symfun::monomial_symmetric(roots, {3, 2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(symfun::elementary_rewrite(S, e));
}
BENCHMARK(BM_RewriteMonomialSymmetric)->DenseRange(3, 6);
