#include <benchmark/benchmark.h>

#include "coxalg/coxeter.hpp"
#include "coxalg/cyclotomic.hpp"
#include "coxalg/poincare.hpp"

namespace {

using namespace coxalg;

void BM_ExtendedCoxeterPoly(benchmark::State& state) {
  WeightSequence p({2, 3, static_cast<unsigned>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(extended_coxeter_poly(p));
}
BENCHMARK(BM_ExtendedCoxeterPoly)->Arg(7)->Arg(30)->Arg(100);

void BM_FactorCyclotomic(benchmark::State& state) {
  IntPoly f = extended_coxeter_poly(WeightSequence({2, 3, 10}));
  for (auto _ : state) benchmark::DoNotOptimize(factor_cyclotomic(f));
}
BENCHMARK(BM_FactorCyclotomic);

void BM_CircleDecision(benchmark::State& state) {
  WeightSequence p({2, 3, static_cast<unsigned>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(off_circle_count(p));
}
BENCHMARK(BM_CircleDecision)->Arg(10)->Arg(11)->Arg(40);

void BM_SpectralRadius(benchmark::State& state) {
  WeightSequence p({2, 3, 11});
  for (auto _ : state) benchmark::DoNotOptimize(spectral_radius(p));
}
BENCHMARK(BM_SpectralRadius);

void BM_CoxeterPeriod(benchmark::State& state) {
  WeightSequence p({2, 3, 10});
  for (auto _ : state) benchmark::DoNotOptimize(coxeter_period(p));
}
BENCHMARK(BM_CoxeterPeriod);

void BM_FormalDecomposition(benchmark::State& state) {
  WeightSequence p({2, 3, 10});
  for (auto _ : state) benchmark::DoNotOptimize(formal_decomposition(p));
}
BENCHMARK(BM_FormalDecomposition);

void BM_SupportMonoid(benchmark::State& state) {
  WeightSequence p({2, 3, 7});
  for (auto _ : state) benchmark::DoNotOptimize(support_monoid(p));
}
BENCHMARK(BM_SupportMonoid);

}  // namespace

BENCHMARK_MAIN();
