#include "binring/barcobar/cobar.hpp"

#include <benchmark/benchmark.h>

#include <algorithm>

using namespace binring;

static void BM_CobarNum(benchmark::State& state) {
  const auto d = static_cast<unsigned>(state.range(0));
  const auto c = num_coalgebra(d);
  for (auto _ : state) benchmark::DoNotOptimize(cobar_cohomology(c, static_cast<int>(std::min(d, 6u)), d));
}
BENCHMARK(BM_CobarNum)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_BarPolynomial(benchmark::State& state) {
  const auto a = polynomial_algebra(8);
  for (auto _ : state) benchmark::DoNotOptimize(bar_homology(a, 5, 8));
}
BENCHMARK(BM_BarPolynomial)->Unit(benchmark::kMillisecond);
