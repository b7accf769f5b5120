// Serial reference path vs OpenMP kernels on the workloads that dominate
// runtime: cocycle systems (HNF/kernel), Smith forms, subgroup scans and the
// Weyl search.
#include <benchmark/benchmark.h>

#include "generators.hpp"
#include "h1lat/cohomology.hpp"
#include "h1lat/normal_form.hpp"
#include "h1lat/weyl_search.hpp"

namespace {

using namespace h1lat;

IntMatrix tall_matrix(std::size_t rows, std::size_t cols) {
  testing::Rng rng(42);
  return testing::random_matrix(rng, rows, cols, -3, 3);
}

Exec policy(const benchmark::State& state) {
  return state.range(0) == 0 ? Exec::serial : Exec::parallel;
}

void BM_KernelBasis(benchmark::State& state) {
  const IntMatrix a = tall_matrix(48, static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(a, policy(state)));
}
BENCHMARK(BM_KernelBasis)->ArgsProduct({{0, 1}, {64, 128}})->Unit(benchmark::kMillisecond);

void BM_SmithForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(1));
  const IntMatrix a = tall_matrix(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(smith_form(a, policy(state)));
}
BENCHMARK(BM_SmithForm)->ArgsProduct({{0, 1}, {16, 32}})->Unit(benchmark::kMillisecond);

void BM_CocycleH1(benchmark::State& state) {
  testing::Rng rng(7);
  GLattice m = GLattice::make(8, Cyclic{testing::random_finite_order(rng, 8, 8)});
  H1Options opts;
  opts.exec = policy(state);
  for (auto _ : state) benchmark::DoNotOptimize(h1_cocycle(m, opts));
}
BENCHMARK(BM_CocycleH1)->ArgsProduct({{0, 1}})->Unit(benchmark::kMillisecond);

void BM_ObstructionScan(benchmark::State& state) {
  auto m = permutation_module({{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 0}}, GroupKind::cyclic);
  H1Options opts;
  opts.exec = policy(state);
  for (auto _ : state) benchmark::DoNotOptimize(obstruction_scan(m, opts));
}
BENCHMARK(BM_ObstructionScan)->ArgsProduct({{0, 1}})->Unit(benchmark::kMillisecond);

void BM_WeylSearch(benchmark::State& state) {
  WeylSearchConfig cfg;
  cfg.exec = policy(state);
  for (auto _ : state) benchmark::DoNotOptimize(weyl_search(3, 3, cfg));
}
BENCHMARK(BM_WeylSearch)->ArgsProduct({{0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
