#include "binring/spaces/cochains.hpp"
#include "binring/spaces/kunneth.hpp"
#include "binring/spaces/standard.hpp"

#include <benchmark/benchmark.h>

using namespace binring;

static void BM_SpaceCohomology(benchmark::State& state, const char* name) {
  const auto x = standard_space(name);
  for (auto _ : state) benchmark::DoNotOptimize(space_cohomology(x, x.dimension() + 1));
}
BENCHMARK_CAPTURE(BM_SpaceCohomology, torus, "torus")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SpaceCohomology, rp2, "rp2")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SpaceCohomology, sphere3, "sphere3")->Unit(benchmark::kMillisecond);

static void BM_KunnethCircleSphere(benchmark::State& state) {
  const auto x = circle(), y = sphere(2);
  for (auto _ : state) benchmark::DoNotOptimize(kunneth_check(x, y, 4));
}
BENCHMARK(BM_KunnethCircleSphere)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
