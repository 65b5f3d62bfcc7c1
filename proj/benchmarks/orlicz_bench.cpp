#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "orlicz/orlicz.hpp"

namespace {

using namespace orlicz;

SimpleFunction random_simple(int n) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.1, 2.0);
  std::vector<Atom> atoms;
  for (int i = 0; i < n; ++i) atoms.push_back({u(rng), u(rng)});
  return SimpleFunction(std::move(atoms));
}

MatrixObservable random_matrix(int n) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g;
  Eigen::MatrixXcd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = {g(rng), g(rng)};
  return MatrixObservable(a / n);
}

void BM_LuxemburgSimple(benchmark::State& state) {
  const auto y = YoungFunction::cosh_minus_1();
  const auto f = random_simple(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(luxemburg_norm(y, f));
}
BENCHMARK(BM_LuxemburgSimple)->Arg(8)->Arg(64)->Arg(512);

void BM_OrliczSimple(benchmark::State& state) {
  const auto y = YoungFunction::llog();
  const auto f = random_simple(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(orlicz_norm(y, f));
}
BENCHMARK(BM_OrliczSimple)->Arg(8)->Arg(64);

void BM_ModularLogProfile(benchmark::State& state) {
  const auto y = YoungFunction::xlog1p();
  const auto p = DecreasingProfile::log_singularity(1.0, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(modular(y, p));
}
BENCHMARK(BM_ModularLogProfile);

void BM_ModularWeighted(benchmark::State& state) {
  const auto y = YoungFunction::power(2.0);
  const auto p = DecreasingProfile::power(1.0, 1.5);
  const auto w = DecreasingProfile::exponential(1.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(modular(y, p, w));
}
BENCHMARK(BM_ModularWeighted);

void BM_NcNorm(benchmark::State& state) {
  const auto y = YoungFunction::cosh_minus_1();
  const auto a = random_matrix(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nc_norm(y, a));
}
BENCHMARK(BM_NcNorm)->Arg(4)->Arg(16)->Arg(64);

void BM_Majorization(benchmark::State& state) {
  const auto f = random_matrix(static_cast<int>(state.range(0)));
  const auto g = random_matrix(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(majorization_check(f, g));
}
BENCHMARK(BM_Majorization)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
