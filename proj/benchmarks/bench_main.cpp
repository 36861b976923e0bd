#include <benchmark/benchmark.h>

#include "monopath/counting.hpp"
#include "monopath/families.hpp"
#include "monopath/fibers.hpp"
#include "monopath/flips.hpp"
#include "monopath/orientation.hpp"

using namespace monopath;

static void BM_orient_hypercube(benchmark::State& state) {
  const auto inst = make({Family::hypercube, 6});
  for (auto _ : state) {
    benchmark::DoNotOptimize(orient(inst.polytope, inst.functional));
  }
}
BENCHMARK(BM_orient_hypercube);

static void BM_count_paths_stacked(benchmark::State& state) {
  const auto o = canonical_orientation({Family::stacked_x, 20});
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_paths_dp(o));
  }
}
BENCHMARK(BM_count_paths_stacked);

static void BM_count_arborescences_hypercube(benchmark::State& state) {
  const auto o = canonical_orientation({Family::hypercube, 6});
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_arborescences(o));
  }
}
BENCHMARK(BM_count_arborescences_hypercube);

static void BM_flip_graph_stacked(benchmark::State& state) {
  const auto o = canonical_orientation({Family::stacked_x, 10});
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_flip_graph(o, 100000));
  }
}
BENCHMARK(BM_flip_graph_stacked);

static void BM_diameter_stacked(benchmark::State& state) {
  const auto o = canonical_orientation({Family::stacked_x, 10});
  const auto g = build_flip_graph(o, 100000);
  for (auto _ : state) {
    benchmark::DoNotOptimize(diameter(g));
  }
}
BENCHMARK(BM_diameter_stacked);

static void BM_inverse_limit_stacked(benchmark::State& state) {
  const auto o = canonical_orientation({Family::stacked_x, 10});
  const auto d = fiber_diagram(o);
  for (auto _ : state) {
    benchmark::DoNotOptimize(inverse_limit(d, 100000));
  }
}
BENCHMARK(BM_inverse_limit_stacked);

static void BM_subset_model_stacked(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(xn_subset_model(20));
  }
}
BENCHMARK(BM_subset_model_stacked);

BENCHMARK_MAIN();
