// OpenMP kernels against their serial reference implementations.

#include "rootedpoly/oracle.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace rootedpoly;

namespace {

Graph random_graph(int n) {
  std::mt19937 rng(static_cast<unsigned>(n));
  std::uniform_real_distribution<double> u(0, 1);
  Graph g(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (u(rng) < 0.5) g.add_edge(a, b);
    }
  }
  return g;
}

void BM_CircuitPoly(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(circuit_poly(g, 16));
}

void BM_CircuitPolySerial(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(circuit_poly_serial(g, 16));
}

void BM_Permanental(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(permanental_poly_check(g, 16));
}

void BM_PermanentalSerial(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(permanental_poly_check_serial(g, 16));
}

}  // namespace

BENCHMARK(BM_CircuitPoly)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CircuitPolySerial)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Permanental)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PermanentalSerial)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
