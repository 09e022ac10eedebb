#include <benchmark/benchmark.h>

#include "udw/correlation.hpp"
#include "udw/entanglement.hpp"
#include "udw/response.hpp"

namespace {

const udw::QuadratureBudget kBudget{};

void TransitionCircular(benchmark::State& state) {
  const auto kin = udw::derive_circular(state.range(0), 1.0, 0.2);
  const udw::DetectorSpec det{0.1};
  for (auto _ : state) {
    auto r = udw::transition_circular(kin, det, kBudget);
    benchmark::DoNotOptimize(r.p_over_lambda2);
  }
}
BENCHMARK(TransitionCircular)->Arg(1)->Arg(8)->Arg(24);

void TransitionUniform(benchmark::State& state) {
  const auto kin = udw::derive_uniform(state.range(0), 0.2);
  const udw::DetectorSpec det{0.1};
  for (auto _ : state) {
    auto r = udw::transition_uniform(kin, det, kBudget);
    benchmark::DoNotOptimize(r.p_over_lambda2);
  }
}
BENCHMARK(TransitionUniform)->Arg(1)->Arg(8)->Arg(24);

void XComoving(benchmark::State& state) {
  const auto kin = udw::derive_circular(state.range(0), 1.0, 0.2);
  const udw::PairGeometry geom{0.2, 0.2, udw::PairKind::CircularComoving};
  const udw::DetectorSpec det{0.1};
  for (auto _ : state) {
    auto x = udw::x_comoving_circular(kin, geom, det, kBudget);
    benchmark::DoNotOptimize(x.abs_x_over_lambda2);
  }
}
BENCHMARK(XComoving)->Arg(1)->Arg(8);

void HarvestComoving(benchmark::State& state) {
  udw::PairConfig cfg;
  cfg.accel_a = state.range(0);
  for (auto _ : state) {
    auto h = udw::harvest_pair(cfg, kBudget);
    benchmark::DoNotOptimize(h.concurrence);
  }
}
BENCHMARK(HarvestComoving)->Arg(1)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
