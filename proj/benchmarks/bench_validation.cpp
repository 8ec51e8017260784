#include <benchmark/benchmark.h>

#include <cmath>

#include "minkhelix/helix.hpp"
#include "minkhelix/validation.hpp"

namespace {

void BM_Validate(benchmark::State& state) {
  const auto m = minkhelix::IntrinsicModel::from_text("sinh(ln(2))/(s^2+1)", "cosh(ln(2))/(s^2+1)", 0, 10);
  const auto sample = minkhelix::example_sample(3, std::log(2.0), 1.0, 0.0, 10.0, 10001);
  for (auto _ : state) benchmark::DoNotOptimize(minkhelix::validate(sample, m));
}
BENCHMARK(BM_Validate)->Unit(benchmark::kMillisecond);

}  // namespace
