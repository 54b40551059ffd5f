#include <benchmark/benchmark.h>

#include "cmsym/eigensolver.hpp"
#include "cmsym/gauge.hpp"
#include "cmsym/normal_symbol.hpp"

using namespace cmsym;

static void BM_PowerToMonomial(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  SymFun f;
  for (const auto& l : partitions_of(d)) f.add_term(l, Frac(1L));
  for (auto _ : state) benchmark::DoNotOptimize(p_to_m(f, d));
}
BENCHMARK(BM_PowerToMonomial)->DenseRange(4, 8, 2);

static void BM_ApplyTrigA(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  InfOperator op(Family::TrigA);
  auto parts = partitions_of(d);
  for (auto _ : state)
    for (const auto& l : parts) benchmark::DoNotOptimize(apply_inf(op, SymFun::monomial(l)));
}
BENCHMARK(BM_ApplyTrigA)->DenseRange(2, 6, 2);

static void BM_ApplyTrigBC(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  InfOperator op(Family::TrigBC);
  auto parts = partitions_of(d);
  for (auto _ : state)
    for (const auto& l : parts) benchmark::DoNotOptimize(apply_inf(op, SymFun::monomial(l)));
}
BENCHMARK(BM_ApplyTrigBC)->DenseRange(2, 4, 1);

static void BM_JackSymbolic(benchmark::State& state) {
  Partition lambda = partitions_of(static_cast<int>(state.range(0))).back();
  for (auto _ : state) benchmark::DoNotOptimize(jack(lambda));
}
BENCHMARK(BM_JackSymbolic)->DenseRange(2, 5, 1)->Unit(benchmark::kMillisecond);

static void BM_JacobiNumeric(benchmark::State& state) {
  InfOperator op(Family::TrigBC,
                 {{Param::k, Frac(Rational(3, 7))}, {Param::p, Frac(Rational(-5, 2))}, {Param::q, Frac(2L)}, {Param::h, Frac(Rational(1, 3))}});
  Partition lambda = partitions_of(static_cast<int>(state.range(0))).front();
  for (auto _ : state) benchmark::DoNotOptimize(jacobi(lambda, op));
}
BENCHMARK(BM_JacobiNumeric)->DenseRange(1, 4, 1)->Unit(benchmark::kMillisecond);

static void BM_NormalSymbol(benchmark::State& state) {
  InfOperator op(Family::TrigA);
  const int w = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(normal_symbol(op, w, w));
}
BENCHMARK(BM_NormalSymbol)->DenseRange(2, 4, 1)->Unit(benchmark::kMillisecond);

static void BM_GaugeRemainderTrigA(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gauge_remainder(Family::TrigA, N));
}
BENCHMARK(BM_GaugeRemainderTrigA)->DenseRange(2, 4, 1)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
