#include <benchmark/benchmark.h>

#include "cone_runge/clifford.hpp"
#include "cone_runge/cone.hpp"
#include "cone_runge/random.hpp"

using namespace cone_runge;

static void BM_Product(benchmark::State& state) {
  Rng rng(1);
  Cl3Element x = sample_root_sphere(rng), y = sample_root_sphere(rng);
  for (auto _ : state) {
    x = x * y;
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_Product);

static void BM_Split(benchmark::State& state) {
  Rng rng(2);
  const Cl3Element x = sample_root_sphere(rng);
  for (auto _ : state) benchmark::DoNotOptimize(split(x));
}
BENCHMARK(BM_Split);

static void BM_InCone(benchmark::State& state) {
  Rng rng(3);
  const Cl3Element J = sample_root_sphere(rng);
  const Cl3Element x = Cl3Element::scalar(0.3) + 1.7 * J;
  for (auto _ : state) benchmark::DoNotOptimize(in_cone(x));
}
BENCHMARK(BM_InCone);
