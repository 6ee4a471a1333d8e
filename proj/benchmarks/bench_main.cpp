#include <benchmark/benchmark.h>

#include <numbers>

#include "qdual/duality.hpp"
#include "qdual/estimator.hpp"
#include "qdual/random.hpp"

namespace q = qdual;

namespace {

void BM_UnitaryEigendecomposition(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const q::SquareMatrix u = q::random_unitary(n, 42);
  for (auto _ : state) {
    q::PhaseSpectrum spectrum = q::unitary_eigendecomposition(u);
    benchmark::DoNotOptimize(spectrum);
  }
}
BENCHMARK(BM_UnitaryEigendecomposition)->DenseRange(1, 5);

void BM_Dualize(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const q::SquareMatrix u = q::random_unitary(n, 7);
  for (auto _ : state) {
    q::PurifiedState dual = q::dualize(u);
    benchmark::DoNotOptimize(dual);
  }
}
BENCHMARK(BM_Dualize)->DenseRange(1, 4);

void BM_EnumeratePrograms(benchmark::State& state) {
  const int max_bits = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::size_t count = 0;
    q::enumerate_programs(2, max_bits,
                          [&](const q::Program&, const q::Circuit&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumeratePrograms)->Arg(9)->Arg(13)->Arg(17);

void BM_EstimateUnitary(benchmark::State& state) {
  const double r = 1.0 / std::numbers::sqrt2;
  const q::SquareMatrix h(2, {r, r, r, -r});
  for (auto _ : state) {
    q::ComplexityEstimate est = q::estimate_unitary_complexity(h, q::Budget{12, 8});
    benchmark::DoNotOptimize(est);
  }
}
BENCHMARK(BM_EstimateUnitary);

void BM_EstimateDual(benchmark::State& state) {
  const q::SquareMatrix z(2, {1, 0, 0, -1});
  for (auto _ : state) {
    q::ComplexityEstimate est = q::estimate_dual_complexity(z, q::Budget{15, 8});
    benchmark::DoNotOptimize(est);
  }
}
BENCHMARK(BM_EstimateDual);

}  // namespace

BENCHMARK_MAIN();
