#include <benchmark/benchmark.h>

#include "minkhelix/frenet_integrator.hpp"

namespace {

void BM_Integrate(benchmark::State& state) {
  const auto m = minkhelix::IntrinsicModel::from_text("1", "s", 1, 11);
  minkhelix::IntegratorConfig cfg;
  cfg.reorthonormalize_every = static_cast<int>(state.range(0));
  const auto frame = minkhelix::default_initial_frame(m);
  for (auto _ : state) benchmark::DoNotOptimize(minkhelix::integrate(m, {}, frame, cfg, 10000));
  state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_Integrate)->Arg(1)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace
