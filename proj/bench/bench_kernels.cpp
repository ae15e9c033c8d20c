// OpenMP kernels against their serial references.

#include "strongl/contfrac.hpp"
#include "strongl/linkdiag.hpp"
#include "strongl/signmat.hpp"
#include "strongl/surgery.hpp"

#include <benchmark/benchmark.h>

using namespace strongl;

static void BM_EnumerateG3_Parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_effective_classes(3));
}
static void BM_EnumerateG3_Serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_effective_classes_reference(3));
}
BENCHMARK(BM_EnumerateG3_Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateG3_Serial)->Unit(benchmark::kMillisecond);

static void BM_EnumerateG4_Parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_maximal_effective_classes(4));
}
BENCHMARK(BM_EnumerateG4_Parallel)->Unit(benchmark::kMillisecond);

static void BM_Claim3_Parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(check_claim3(40, 8));
}
static void BM_Claim3_Serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(check_claim_reference(1, 40, 8));
}
BENCHMARK(BM_Claim3_Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Claim3_Serial)->Unit(benchmark::kMillisecond);

static void BM_KirbyGrid_Parallel(benchmark::State& st) {
  const auto grid = kirby_grid(20, 4);
  for (auto _ : st) benchmark::DoNotOptimize(verify_kirby_grid(grid));
}
static void BM_KirbyGrid_Serial(benchmark::State& st) {
  const auto grid = kirby_grid(20, 4);
  for (auto _ : st) benchmark::DoNotOptimize(verify_kirby_grid_reference(grid));
}
BENCHMARK(BM_KirbyGrid_Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KirbyGrid_Serial)->Unit(benchmark::kMillisecond);

static void BM_Contains_Parallel(benchmark::State& st) {
  const Diagram big = braid_closure(3, {1, -2, 1, -2, 1, -2, 1, -2});
  const Diagram small = braid_closure(3, {1, -2, 1, -2});
  for (auto _ : st) benchmark::DoNotOptimize(diagram_contains(small, big));
}
static void BM_Contains_Serial(benchmark::State& st) {
  const Diagram big = braid_closure(3, {1, -2, 1, -2, 1, -2, 1, -2});
  const Diagram small = braid_closure(3, {1, -2, 1, -2});
  for (auto _ : st) benchmark::DoNotOptimize(diagram_contains_reference(small, big));
}
BENCHMARK(BM_Contains_Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Contains_Serial)->Unit(benchmark::kMillisecond);

static void BM_BrmFree_Chain(benchmark::State& st) {
  AWTree t;
  for (int i = 0; i < 5; ++i) {
    t.vertices.push_back({"v" + std::to_string(i), i % 2 ? -1 : 1, Slope(2)});
    if (i) t.edges.push_back({"v" + std::to_string(i - 1), "v" + std::to_string(i)});
  }
  const Diagram d = chain_tree_to_diagram(t);
  for (auto _ : st) benchmark::DoNotOptimize(brm_free(d));
}
BENCHMARK(BM_BrmFree_Chain)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
