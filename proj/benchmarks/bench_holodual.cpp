#include <benchmark/benchmark.h>

#include <vector>

#include "holodual/holodual.hpp"

namespace {

using namespace holodual;

void BM_FourierAnalyze(benchmark::State& state) {
  const int M = static_cast<int>(state.range(0));
  const auto samples = fourier_synthesize(random_boundary(-M / 4, M / 4, 1), M);
  for (auto _ : state) benchmark::DoNotOptimize(fourier_analyze(samples));
}
BENCHMARK(BM_FourierAnalyze)->Arg(64)->Arg(256)->Arg(1024);

void BM_SobolevNorm(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const auto f = random_boundary(-N, N, 2);
  for (auto _ : state) benchmark::DoNotOptimize(sobolev_norm(f, SobolevIndex{-1.5}));
}
BENCHMARK(BM_SobolevNorm)->Arg(256)->Arg(4096);

void BM_CauchyQuadrature(benchmark::State& state) {
  const int M = static_cast<int>(state.range(0));
  const auto f = random_boundary(0, 32, 3);
  const auto curve = parse_curve("ellipse:1.5,0.7");
  const QuadratureGrid grid(M);
  const auto values =
      sample_on_curve(curve, grid, [&](Complex z) { return evaluate_laurent(f, z); });
  for (auto _ : state) {
    benchmark::DoNotOptimize(cauchy_integral_quadrature(values, curve, grid, {0.2, 0.1}));
  }
}
BENCHMARK(BM_CauchyQuadrature)->Arg(256)->Arg(1024);

void BM_VerifyTheorem1(benchmark::State& state) {
  const int trials = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem1(0, trials, 32, 7));
}
BENCHMARK(BM_VerifyTheorem1)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_EstimateMinSobolev(benchmark::State& state) {
  const auto u = growth_family_coeffs({{1.0, 0.0}, 1.0, static_cast<int>(state.range(0))});
  std::vector<int> grid;
  for (int s = -8; s <= 4; ++s) grid.push_back(s);
  for (auto _ : state) benchmark::DoNotOptimize(estimate_min_sobolev(u, grid));
}
BENCHMARK(BM_EstimateMinSobolev)->Arg(1024)->Arg(4096);

}  // namespace

BENCHMARK_MAIN();
