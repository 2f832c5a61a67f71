#include <benchmark/benchmark.h>

#include "cone_runge/approx.hpp"

using namespace cone_runge;

namespace {

DomainSpec annulus(double r0, double r1) {
  return DomainSpec{Window{-5, 5, -5, 5}, 32, {{ShapeOp::kAdd, Disk{0, 0, r1}}, {ShapeOp::kSubtract, Disk{0, 0, r0}}}};
}

SliceFunction pole_sphere() {
  return SliceFunction(StemFunction(
      RationalSliceFunction::from_parts(RealPolynomial::sphere_factor(0, 0.4), SlicePolynomial({Cl3Element::scalar(1)}))));
}

}  // namespace

static void BM_RationalFit(benchmark::State& state) {
  const CompactSampler K = CompactSampler::build(annulus(1.5, 2), rasterize(annulus(1, 3)));
  const SliceFunction f = pole_sphere();
  const std::vector<Pole> poles = {Pole{0, 0.4}};
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rational_approx(f, K, poles, d));
}
BENCHMARK(BM_RationalFit)->Arg(8)->Arg(20)->Arg(40);

static void BM_Experiment(benchmark::State& state) {
  ExperimentOptions opts;
  opts.threads = static_cast<unsigned>(state.range(0));
  const SliceFunction f = pole_sphere();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        runge_experiment(annulus(1, 3), annulus(0.5, 3), annulus(1.5, 2), f, default_degrees(), opts));
  }
}
BENCHMARK(BM_Experiment)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
