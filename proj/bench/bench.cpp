// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <cmath>
#include <span>

#include "indcyc/constructions.hpp"
#include "indcyc/extremal_search.hpp"
#include "indcyc/grid.hpp"
#include "indcyc/induced_count.hpp"

using namespace indcyc;

namespace {

const Graph& bench_graph() {
  static const Graph g = random_graph(40, 0.25, 7);
  return g;
}

void BM_CountFastSerial(benchmark::State& state) {
  const auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_fast_serial(bench_graph(), k));
}

void BM_CountFastParallel(benchmark::State& state) {
  const auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_fast(bench_graph(), k, 0));
}

void BM_RootedSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(count_rooted_all_serial(bench_graph(), 6));
}

void BM_RootedParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(count_rooted_all(bench_graph(), 6, 0));
}

double objective(std::span<const double> p) {
  return p[0] * p[1] * std::exp(-p[0] - p[1] + p[2]);
}

const grid::Lattice& bench_lattice() {
  static const grid::Lattice lat(grid::Box{{0.0, 0.0, 0.0}, {2.0, 2.0, 1.0}}, 1e-2);
  return lat;
}

void BM_GridSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(grid::maximize_serial(objective, bench_lattice()).value);
}

void BM_GridParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(grid::maximize(objective, bench_lattice(), 0).value);
}

void BM_ExhaustiveSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_max_serial(7, 5).best_count);
}

void BM_ExhaustiveParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_max(7, 5, {false, 0}).best_count);
}

}  // namespace

BENCHMARK(BM_CountFastSerial)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountFastParallel)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RootedSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RootedParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExhaustiveSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExhaustiveParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
