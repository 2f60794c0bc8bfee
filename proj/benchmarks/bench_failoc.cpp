#include <benchmark/benchmark.h>

#include "failoc/graph_gen.hpp"
#include "failoc/oracle.hpp"
#include "failoc/placement.hpp"
#include "failoc/plc.hpp"

namespace {

failoc::graph sample(std::size_t n, std::size_t m, std::uint64_t seed) {
  return failoc::random_connected_graph(n, m, seed);
}

void bm_decompose(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const failoc::graph g = sample(n, 2 * n, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(failoc::decompose(g));
  }
}
BENCHMARK(bm_decompose)->Arg(16)->Arg(64)->Arg(256);

void bm_placement(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const failoc::graph g = sample(n, 2 * n, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(failoc::omp_csp(g, 1));
  }
}
BENCHMARK(bm_placement)->Arg(16)->Arg(64)->Arg(256);

void bm_oracle_paths(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const failoc::graph g = sample(n, 2 * n, 7);
  const failoc::monitor_set monitors{{g.nodes().front(), g.nodes().back()}};
  const failoc::oracle_limits limits{.max_nodes = 64, .max_paths = 5000000};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        failoc::enumerate_monitor_paths(g, monitors, limits));
  }
}
BENCHMARK(bm_oracle_paths)->Arg(8)->Arg(10)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
