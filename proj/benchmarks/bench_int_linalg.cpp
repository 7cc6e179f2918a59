#include "latgauss/int_linalg.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace latgauss;

namespace {

IntMat random_matrix(std::size_t n, long long lo, long long hi, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  IntMat m(n, n);
  const unsigned long long span = static_cast<unsigned long long>(hi - lo + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = lo + static_cast<long long>(rng() % span);
  return m;
}

void BM_det(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), -50, 50, 7);
  for (auto _ : state) benchmark::DoNotOptimize(det(m));
}
BENCHMARK(BM_det)->Arg(3)->Arg(5)->Arg(8);

void BM_smith_normal_form(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), -20, 20, 9);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_smith_normal_form)->Arg(3)->Arg(5);

void BM_row_hnf(benchmark::State& state) {
  auto m = random_matrix(static_cast<std::size_t>(state.range(0)), -20, 20, 11);
  if (det(m) == 0) m(0, 0) += 1;
  for (auto _ : state) benchmark::DoNotOptimize(row_hnf(m));
}
BENCHMARK(BM_row_hnf)->Arg(3)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
