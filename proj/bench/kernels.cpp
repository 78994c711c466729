// Serial reference vs OpenMP kernels. Thread count comes from OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <random>

#include "supertopo/cliques.hpp"
#include "supertopo/star.hpp"

using namespace supertopo;

namespace {

Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "parallel"); }

void BM_StarDistanceTetrahedron(benchmark::State& state) {
  const auto k = make_complex({Simplex{"a", "b", "c", "d"}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(star_distance(Simplex{"a", "b"}, Simplex{"c", "d"}, k, mode(state)));
  }
  label(state);
}
BENCHMARK(BM_StarDistanceTetrahedron)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_DiscretenessTriangle(benchmark::State& state) {
  const auto k = make_complex({Simplex{"a", "b", "c"}});
  const StarFamily f = star_cover(k, k);
  for (auto _ : state) benchmark::DoNotOptimize(discreteness_certificate(f, mode(state)));
  label(state);
}
BENCHMARK(BM_DiscretenessTriangle)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_MaximalCliques(benchmark::State& state) {
  std::mt19937_64 rng(42);
  const std::size_t n = static_cast<std::size_t>(state.range(1));
  Graph g(n, boost::dynamic_bitset<>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng() % 100 < 50) {
        g[i].set(j);
        g[j].set(i);
      }
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(maximal_cliques(g, mode(state)));
  label(state);
}
BENCHMARK(BM_MaximalCliques)->Args({0, 60})->Args({1, 60})->Args({0, 120})->Args({1, 120})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
