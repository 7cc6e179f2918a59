#include "latgauss/certify.hpp"
#include "latgauss/enumerate.hpp"
#include "latgauss/polytope.hpp"

#include <benchmark/benchmark.h>

#include <cstddef>
#include <utility>
#include <vector>

using namespace latgauss;

namespace {

LatticePolytope standard_simplex(std::size_t dim) {
  std::vector<IntVec> vs{IntVec(dim, 0)};
  for (std::size_t i = 0; i < dim; ++i) {
    IntVec e(dim, 0);
    e[i] = 1;
    vs.push_back(std::move(e));
  }
  return LatticePolytope::build(vs);
}

void BM_enumerate_simplices(benchmark::State& state) {
  const EnumerateOptions opts{.dim = 3, .max_vol = state.range(0), .jobs = 1};
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_simplices(opts));
}
BENCHMARK(BM_enumerate_simplices)->Arg(5)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_enumerate_simplices_parallel(benchmark::State& state) {
  const EnumerateOptions opts{
      .dim = 3, .max_vol = 20, .jobs = static_cast<unsigned>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_simplices(opts));
}
BENCHMARK(BM_enumerate_simplices_parallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_certify_standard_simplex(benchmark::State& state) {
  const auto p = standard_simplex(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(certify(p));
}
BENCHMARK(BM_certify_standard_simplex)->Arg(3)->Arg(4)->Arg(5);

void BM_certify_dilated_simplex(benchmark::State& state) {
  const long long d = state.range(0);
  const auto p = LatticePolytope::build(
      {IntVec{0, 0, 0}, IntVec{d, 0, 0}, IntVec{0, d, 0}, IntVec{0, 0, d}});
  for (auto _ : state) benchmark::DoNotOptimize(certify(p));
}
BENCHMARK(BM_certify_dilated_simplex)->Arg(2)->Arg(5);

void BM_verify_lemma(benchmark::State& state) {
  const EnumerateOptions opts{.dim = 3, .max_vol = state.range(0), .jobs = 1};
  for (auto _ : state) benchmark::DoNotOptimize(verify_lemma(opts));
}
BENCHMARK(BM_verify_lemma)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_polytope_build(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  std::vector<IntVec> vs{IntVec(dim, 0)};
  for (std::size_t i = 0; i < dim; ++i) {
    IntVec e(dim, 0);
    e[i] = 1;
    vs.push_back(std::move(e));
  }
  for (auto _ : state) benchmark::DoNotOptimize(LatticePolytope::build(vs));
}
BENCHMARK(BM_polytope_build)->Arg(3)->Arg(4)->Arg(5)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
