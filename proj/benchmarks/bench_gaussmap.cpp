#include "latgauss/certify.hpp"
#include "latgauss/gaussmap.hpp"

#include <benchmark/benchmark.h>

#include <cstddef>
#include <vector>

using namespace latgauss;

namespace {

void BM_probe_hyperplane(benchmark::State& state) {
  const std::vector<double> params{1.0, 1.0, 1.0, 1.0};
  const auto targets = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(real_fibered_verdict(ProbeFamily::hyperplane, params, targets, 42));
}
BENCHMARK(BM_probe_hyperplane)->Arg(100)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_probe_example19_all_real(benchmark::State& state) {
  const std::vector<double> params{3.0, 1.0, 1.0, 1.0};
  const auto targets = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(real_fibered_verdict(ProbeFamily::example19, params, targets, 42));
}
BENCHMARK(BM_probe_example19_all_real)->Arg(100)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

// Parameters outside the real-fibered region: the probe stops at the first
// witness, then runs the discriminant scan, so this measures the short-circuit
// path plus the scan.
void BM_probe_example19_witness(benchmark::State& state) {
  const std::vector<double> params{3.0, 1.0, 1.0, -1.0};
  for (auto _ : state)
    benchmark::DoNotOptimize(real_fibered_verdict(ProbeFamily::example19, params, 10000, 42));
}
BENCHMARK(BM_probe_example19_witness)->Unit(benchmark::kMillisecond);

void BM_newton_polytope_degree(benchmark::State& state) {
  const auto family = state.range(0) == 0 ? ProbeFamily::hyperplane : ProbeFamily::example19;
  const std::vector<double> params{3.0, 1.0, 1.0, 1.0};
  const auto poly = family_polynomial(family, params);
  for (auto _ : state) benchmark::DoNotOptimize(log_gauss_degree(newton_polytope(poly)));
}
BENCHMARK(BM_newton_polytope_degree)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
