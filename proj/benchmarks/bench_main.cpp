#include "tropjac/abel_jacobi.hpp"
#include "tropjac/ceresa.hpp"
#include "tropjac/zonotope.hpp"

#include <benchmark/benchmark.h>

using namespace tropjac;

namespace {

MetricGraph unit_k4() { return canonical_k4(std::vector<Length>(6, Length(Rational(1)))); }

MetricGraph k4_lengths(int a) {
  return canonical_k4({Rational(a), Rational(1), Rational(1), Rational(1), Rational(1), Rational(1)});
}

}  // namespace

static void BM_SymbolicGram(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(JacobianData(canonical_k4()).gram_poly());
}
BENCHMARK(BM_SymbolicGram);

static void BM_SymbolicPeriods(benchmark::State& state) {
  JacobianData jd(canonical_k4());
  for (auto _ : state) benchmark::DoNotOptimize(period_generators(jd));
}
BENCHMARK(BM_SymbolicPeriods);

static void BM_SymbolicCone(benchmark::State& state) {
  JacobianData jd(canonical_k4());
  for (auto _ : state) benchmark::DoNotOptimize(symbolic_ceresa(jd));
}
BENCHMARK(BM_SymbolicCone)->Unit(benchmark::kMillisecond);

static void BM_BuildCW(benchmark::State& state) {
  JacobianData jd(k4_lengths(static_cast<int>(state.range(0))));
  FramedChain diff = ceresa_difference(jd, alignment_translation(jd, "C"));
  std::size_t cells = 0;
  for (auto _ : state) cells = build_cw(jd, segments_of(diff)).cells.size();
  state.counters["cells"] = static_cast<double>(cells);
}
BENCHMARK(BM_BuildCW)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_SolveBoundary(benchmark::State& state) {
  JacobianData jd(unit_k4());
  FramedChain diff = ceresa_difference(jd, alignment_translation(jd, "C"));
  CWComplex3 cw = build_cw(jd, segments_of(diff));
  for (auto _ : state) benchmark::DoNotOptimize(solve_boundary(cw, diff));
}
BENCHMARK(BM_SolveBoundary)->Unit(benchmark::kMillisecond);

static void BM_CeresaUnitK4(benchmark::State& state) {
  JacobianData jd(unit_k4());
  CeresaOptions opt;
  opt.symbolic = false;
  for (auto _ : state) benchmark::DoNotOptimize(ceresa_invariant(jd, opt));
}
BENCHMARK(BM_CeresaUnitK4)->Unit(benchmark::kMillisecond);

static void BM_ZonotopeK4(benchmark::State& state) {
  JacobianData jd(unit_k4());
  for (auto _ : state) benchmark::DoNotOptimize(build_zonotope(jd));
}
BENCHMARK(BM_ZonotopeK4)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
