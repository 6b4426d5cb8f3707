#include <benchmark/benchmark.h>

#include "polyharm/equivalence.hpp"
#include "polyharm/invariant_basis.hpp"
#include "polyharm/mean_value.hpp"
#include "polyharm/roots.hpp"
#include "polyharm/tau.hpp"

using namespace polyharm;

static void BM_PolyMul(benchmark::State& state) {
  const auto a = alternating_b3();
  const auto b = inv_e4() * inv_e4();
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolyMul);

static void BM_BuildSolid(benchmark::State& state) {
  const Rational r(3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(build_solid<Rational>(Family::TriakisOcta, r));
}
BENCHMARK(BM_BuildSolid);

static void BM_TauFaceExact(benchmark::State& state) {
  const auto inst = build_solid<Rational>(Family::TriakisOcta, Rational(3, 2));
  for (auto _ : state) benchmark::DoNotOptimize(tau_all_exact(inst, 2, 6));
}
BENCHMARK(BM_TauFaceExact);

static void BM_DecomposeTau8(benchmark::State& state) {
  const auto inst = build_solid<Rational>(Family::TriakisOcta, Rational(3, 2));
  const auto tau = tau_all_exact(inst, 2, 8)[8];
  const auto& basis = invariant_basis(Group::B3);
  for (auto _ : state) benchmark::DoNotOptimize(decompose(tau, basis));
}
BENCHMARK(BM_DecomposeTau8);

static void BM_SolveB3(benchmark::State& state) {
  const auto sys = b3_system();
  for (auto _ : state) benchmark::DoNotOptimize(solve(sys, 11));
}
BENCHMARK(BM_SolveB3);

static void BM_SturmIsolateOctic(benchmark::State& state) {
  const auto& p = octa_edge_critical_poly();
  for (auto _ : state) benchmark::DoNotOptimize(isolate_positive_roots(p));
}
BENCHMARK(BM_SturmIsolateOctic);

static void BM_MeanValueDefect(benchmark::State& state) {
  const auto inst = build_solid_f(Family::TriakisOcta, Rational(2), 128);
  MeanValueEvaluator ev(inst, 1);
  const auto f = to_bigfloat(alternating_b3(), 128);
  const Vec3<BigFloat> x{BigFloat(1, 128), BigFloat(0, 128), BigFloat(1, 128)};
  const BigFloat rho(2, 128);
  // first call pays for the moments; steady state is the binomial shift
  benchmark::DoNotOptimize(ev.defect(f, x, rho));
  for (auto _ : state) benchmark::DoNotOptimize(ev.defect(f, x, rho));
}
BENCHMARK(BM_MeanValueDefect);

BENCHMARK_MAIN();
