#include <benchmark/benchmark.h>

#include "minkhelix/helix.hpp"
#include "minkhelix/intrinsic_model.hpp"

namespace {

using minkhelix::IntrinsicModel;

void BM_TurningAngle(benchmark::State& state) {
  const IntrinsicModel m = IntrinsicModel::from_text("sinh(ln(2))/(s^2+1)", "cosh(ln(2))/(s^2+1)", 0, 10);
  for (auto _ : state) benchmark::DoNotOptimize(minkhelix::turning_angle(m, 10.0));
}
BENCHMARK(BM_TurningAngle);

void BM_Reconstruct(benchmark::State& state) {
  const IntrinsicModel m = IntrinsicModel::from_text("sinh(ln(2))/s", "cosh(ln(2))/s", 1, 7.389);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(minkhelix::reconstruct(m, n));
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_Reconstruct)->Arg(101)->Arg(1001)->Arg(10001)->Unit(benchmark::kMillisecond);

}  // namespace
