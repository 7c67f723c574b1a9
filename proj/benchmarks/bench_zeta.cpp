#include <benchmark/benchmark.h>

#include "mzeta/hurwitz.hpp"
#include "mzeta/identities.hpp"
#include "mzeta/quadrature.hpp"
#include "mzeta/series.hpp"

namespace {

void HurwitzPoint(benchmark::State& state) {
  const double s = 2.0;
  const double alpha = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mzeta::hurwitz_zeta(s, alpha));
  }
}
BENCHMARK(HurwitzPoint)->Arg(1)->Arg(10)->Arg(100)->Arg(100000);

void Zeta2Series(benchmark::State& state) {
  const double s1 = 1.0 + state.range(0) / 10.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mzeta::zeta2_series(s1, 2.0));
  }
}
BENCHMARK(Zeta2Series)->Arg(5)->Arg(10)->Arg(20);

void PairIntegral(benchmark::State& state) {
  const double s = state.range(0) / 10.0;
  const std::vector<mzeta::IntegrandFactor> factors = {
      mzeta::IntegrandFactor::smooth(s), mzeta::IntegrandFactor::smooth(s + 1.0)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(mzeta::integrate_product(factors));
  }
}
BENCHMARK(PairIntegral)->Arg(15)->Arg(20)->Arg(30);

void SteppedIntegral(benchmark::State& state) {
  const std::vector<mzeta::IntegrandFactor> factors = {
      mzeta::IntegrandFactor::smooth(3.0), mzeta::IntegrandFactor::step(2.0)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(mzeta::integrate_product(factors));
  }
}
BENCHMARK(SteppedIntegral);

void Theorem2Point(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(mzeta::zeta3_integral(2.0, 2.0, 2.0));
  }
}
BENCHMARK(Theorem2Point);

void QuadOrderSweep(benchmark::State& state) {
  mzeta::EvaluationConfig cfg;
  cfg.quad_order = static_cast<int>(state.range(0));
  const std::vector<mzeta::IntegrandFactor> factors = {
      mzeta::IntegrandFactor::smooth(2.0), mzeta::IntegrandFactor::smooth(3.0)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(mzeta::integrate_product(factors, cfg));
  }
}
BENCHMARK(QuadOrderSweep)->Arg(12)->Arg(20)->Arg(40);

}  // namespace

BENCHMARK_MAIN();
