#include <benchmark/benchmark.h>

#include "cone_runge/domain.hpp"
#include "cone_runge/runge.hpp"
#include "cone_runge/topology.hpp"

using namespace cone_runge;

namespace {

DomainSpec two_holes(int res) {
  return DomainSpec{Window{-5, 5, -5, 5}, res,
                    {{ShapeOp::kAdd, Disk{0, 0, 3.5}},
                     {ShapeOp::kSubtract, Disk{-1.5, 0, 0.6}},
                     {ShapeOp::kSubtract, Disk{1.5, 0, 0.6}}}};
}

}  // namespace

static void BM_Rasterize(benchmark::State& state) {
  const DomainSpec s = two_holes(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rasterize(s));
}
BENCHMARK(BM_Rasterize)->Arg(32)->Arg(64)->Arg(128);

static void BM_Summarize(benchmark::State& state) {
  const DomainGrid g = rasterize(two_holes(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(summarize(g));
}
BENCHMARK(BM_Summarize)->Arg(32)->Arg(64)->Arg(128);

static void BM_AnalyzePair(benchmark::State& state) {
  const int res = static_cast<int>(state.range(0));
  DomainSpec outer = two_holes(res);
  outer.shapes.pop_back();
  const DomainGrid g = rasterize(two_holes(res)), g1 = rasterize(outer);
  for (auto _ : state) benchmark::DoNotOptimize(analyze_pair(g, g1));
}
BENCHMARK(BM_AnalyzePair)->Arg(32)->Arg(64);
