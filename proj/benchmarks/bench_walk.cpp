#include <benchmark/benchmark.h>

#include "grover/grover.hpp"

namespace {

using namespace grover;

void BM_BuildOperators(benchmark::State& state) {
  const Graph g = unitary_cayley(state.range(0));
  const ArcSpace arcs = arc_space(g);
  for (auto _ : state) benchmark::DoNotOptimize(build_operators(g, arcs));
  state.counters["arcs"] = static_cast<double>(arcs.size());
}
BENCHMARK(BM_BuildOperators)->Arg(12)->Arg(18)->Arg(24)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_MatrixPower(benchmark::State& state) {
  const Graph g = unitary_cayley(24);
  const WalkOperators ops = build_operators(g, arc_space(g));
  const auto tau = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(matrix_power(ops, tau));
}
BENCHMARK(BM_MatrixPower)->Arg(12)->Arg(144)->Unit(benchmark::kMillisecond);

void BM_PeriodBruteforce(benchmark::State& state) {
  const Graph g = unitary_cayley(state.range(0));
  const WalkOperators ops = build_operators(g, arc_space(g));
  for (auto _ : state) benchmark::DoNotOptimize(period_bruteforce(ops));
}
BENCHMARK(BM_PeriodBruteforce)->Arg(12)->Arg(27)->Arg(29)->Unit(benchmark::kMillisecond);

void BM_PeriodSpectral(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  const auto phi = static_cast<std::size_t>(numtheory::euler_phi(n));
  const auto nv = static_cast<std::size_t>(n);
  for (auto _ : state) {
    const auto disc = uc_spectrum(n).scaled(1.0 / static_cast<double>(phi), SpectrumSource::discriminant);
    benchmark::DoNotOptimize(period_spectral(disc, nv * phi / 2, nv, n % 2 == 0));
  }
}
BENCHMARK(BM_PeriodSpectral)->Arg(29)->Arg(60)->Arg(100);

void BM_NumericSpectrum(benchmark::State& state) {
  const RMatrix a = unitary_cayley(state.range(0)).adjacency_matrix();
  for (auto _ : state) benchmark::DoNotOptimize(numeric_spectrum(a));
}
BENCHMARK(BM_NumericSpectrum)->Arg(30)->Arg(60)->Arg(100)->Unit(benchmark::kMicrosecond);

void BM_PstBruteforce(benchmark::State& state) {
  const Graph g = unitary_cayley(state.range(0));
  const WalkOperators ops = build_operators(g, arc_space(g));
  for (auto _ : state) benchmark::DoNotOptimize(pst_bruteforce(ops, 12));
}
BENCHMARK(BM_PstBruteforce)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_RamanujanDirect(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) {
    for (std::int64_t j = 0; j < n; ++j) benchmark::DoNotOptimize(numtheory::ramanujan_direct(j, n));
  }
}
BENCHMARK(BM_RamanujanDirect)->Arg(60)->Arg(300)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
