#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "ssli/ssli.hpp"

namespace {

std::vector<double> log_uniform(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(std::log(0.1), std::log(10.0));
  std::vector<double> x(n);
  for (auto& v : x) v = std::exp(u(rng));
  return x;
}

void BM_ElementarySymmetric(benchmark::State& state) {
  const auto x = log_uniform(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(ssli::elementary_symmetric(x));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ElementarySymmetric)->RangeMultiplier(2)->Range(2, 64)->Complexity(benchmark::oNSquared);

void BM_Phi(benchmark::State& state) {
  const auto e = ssli::coefficients_of(ssli::PositiveVector(log_uniform(static_cast<std::size_t>(state.range(0)), 2)));
  for (auto _ : state) benchmark::DoNotOptimize(ssli::phi(e));
}
BENCHMARK(BM_Phi)->DenseRange(2, 8, 2);

void BM_DerivativeIntegral(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto z = ssli::phi(ssli::coefficients_of(ssli::PositiveVector(log_uniform(n, 3))));
  for (auto _ : state) benchmark::DoNotOptimize(ssli::df_de_integral(z, 1));
}
BENCHMARK(BM_DerivativeIntegral)->DenseRange(2, 8, 2);

void BM_ContourFunctional(benchmark::State& state) {
  const auto a = log_uniform(static_cast<std::size_t>(state.range(0)) - 1, 4);
  for (auto _ : state) benchmark::DoNotOptimize(ssli::f_hat_contour(a));
}
BENCHMARK(BM_ContourFunctional)->DenseRange(2, 5);

void BM_SymmetricEigen(benchmark::State& state) {
  const auto n = static_cast<Eigen::Index>(state.range(0));
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g;
  Eigen::MatrixXd a(n, n);
  for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = g(rng);
  a = (a + a.transpose()).eval();
  for (auto _ : state) benchmark::DoNotOptimize(ssli::symmetric_eigen(a));
}
BENCHMARK(BM_SymmetricEigen)->RangeMultiplier(2)->Range(2, 32);

}  // namespace

BENCHMARK_MAIN();
