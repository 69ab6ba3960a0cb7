// Serial references against the OpenMP kernels. Thread count follows
// OMP_NUM_THREADS.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "packdense/oracle.hpp"
#include "packdense/packing_table.hpp"
#include "packdense/verifier.hpp"

using namespace packdense;

namespace {

void BM_PermutationSweep_Serial(benchmark::State& state) {
  const Permutation q = qell_pattern(3);
  for (auto _ : state) benchmark::DoNotOptimize(serial::brute_force_Mnq(static_cast<int>(state.range(0)), q).max_count);
}

void BM_PermutationSweep_OpenMP(benchmark::State& state) {
  const Permutation q = qell_pattern(3);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_Mnq(static_cast<int>(state.range(0)), q).max_count);
  state.counters["threads"] = omp_get_max_threads();
}

void BM_CompositionSweep_Serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(serial::brute_force_layered(static_cast<int>(state.range(0)), 2));
}

void BM_CompositionSweep_OpenMP(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_layered(static_cast<int>(state.range(0)), 2));
  state.counters["threads"] = omp_get_max_threads();
}

void BM_Verify_Serial(benchmark::State& state) {
  const PackingTable t = PackingTable::build(3, static_cast<int>(state.range(0)));
  const std::vector<CheckId> all(kRegistry.begin(), kRegistry.end());
  for (auto _ : state) benchmark::DoNotOptimize(run_checks_serial(t, all).size());
}

void BM_Verify_OpenMP(benchmark::State& state) {
  const PackingTable t = PackingTable::build(3, static_cast<int>(state.range(0)));
  const std::vector<CheckId> all(kRegistry.begin(), kRegistry.end());
  for (auto _ : state) benchmark::DoNotOptimize(run_checks(t, all).size());
  state.counters["threads"] = omp_get_max_threads();
}

void BM_TableBuild(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(PackingTable::build(2, static_cast<int>(state.range(0))).M(2));
}

}  // namespace

BENCHMARK(BM_PermutationSweep_Serial)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PermutationSweep_OpenMP)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CompositionSweep_Serial)->Arg(20)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CompositionSweep_OpenMP)->Arg(20)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Verify_Serial)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Verify_OpenMP)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TableBuild)->Arg(2000)->Arg(10000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
