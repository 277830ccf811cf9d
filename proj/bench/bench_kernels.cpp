// Serial reference vs OpenMP kernels.
//
//   ./bench/strata_bench --benchmark_filter=Sweep
//   OMP_NUM_THREADS=8 ./bench/strata_bench

#include <benchmark/benchmark.h>

#include "strata/reconstruct.hpp"

using namespace strata;

namespace {

void BM_SweepSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_complete_invariant_serial(state.range(0)));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(enumerate_factors(state.range(0)).size()));
}

void BM_SweepParallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_complete_invariant(state.range(0)));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(enumerate_factors(state.range(0)).size()));
}

// I(1,1)^s: the spectrum is the Boolean lattice 2^s with s! automorphisms.
StratumPoset cube(std::int64_t s) {
  return build_spectrum(product(std::vector<CartanFactor>(static_cast<std::size_t>(s), make_factor(Family::I, {1, 1}))));
}

void BM_AutomorphismsSerial(benchmark::State& state) {
  const auto p = cube(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(poset_automorphisms_serial(p));
}

void BM_AutomorphismsParallel(benchmark::State& state) {
  const auto p = cube(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(poset_automorphisms(p));
}

void BM_SpectrumSweep(benchmark::State& state) {
  const auto pool = spectrum_pool(3, 12);
  for (auto _ : state) benchmark::DoNotOptimize(verify_spectrum(pool, static_cast<std::size_t>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(50)->Arg(300)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(50)->Arg(300)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AutomorphismsSerial)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AutomorphismsParallel)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SpectrumSweep)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
