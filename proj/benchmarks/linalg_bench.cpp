#include "binring/linalg/cohomology.hpp"
#include "binring/linalg/random_complex.hpp"
#include "binring/linalg/smith.hpp"

#include <benchmark/benchmark.h>

using namespace binring;

static void BM_InvariantFactors(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  const auto a = random_matrix(rng, n, n, 5, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(invariant_factors(a));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_InvariantFactors)->RangeMultiplier(2)->Range(8, 64)->Complexity();

static void BM_RandomComplexCohomology(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(cohomology(random_complex(++seed)));
}
BENCHMARK(BM_RandomComplexCohomology);
