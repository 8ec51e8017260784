#include <benchmark/benchmark.h>

#include "minkhelix/expr.hpp"

namespace {

void BM_Parse(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(minkhelix::parse("cosh(ln(2))/(s^2+1) + 0.5*sin(3*s)^2 - exp(-s)"));
}
BENCHMARK(BM_Parse);

void BM_Eval(benchmark::State& state) {
  const minkhelix::Expr e = minkhelix::parse("cosh(ln(2))/(s^2+1) + 0.5*sin(3*s)^2 - exp(-s)");
  double s = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(minkhelix::eval(e, s));
    s += 1e-6;
  }
}
BENCHMARK(BM_Eval);

}  // namespace
