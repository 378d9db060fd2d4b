// Permanent engines on dense +/-1 matrices: the permutation expansion
// (factorial), Ryser's inclusion-exclusion (2^n * n), and the even-cycle
// restriction for skew input.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "skewperm/matrix.hpp"
#include "skewperm/permanent.hpp"

namespace {

using skewperm::Matrix;
using skewperm::Rat;
using skewperm::SkewMatrix;

Matrix pm_one_matrix(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Rat> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  for (int k = 0; k < n * n; ++k) entries.push_back(Rat((rng() & 1) ? 1 : -1));
  return Matrix(n, std::move(entries));
}

Matrix skew_matrix(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Matrix a(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int w = static_cast<int>(rng() % 11) - 5;
      a.at(i, j) = w;
      a.at(j, i) = -w;
    }
  return a;
}

void BM_PermanentNaive(benchmark::State& state) {
  const Matrix a = pm_one_matrix(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(skewperm::permanent_naive(a));
}
BENCHMARK(BM_PermanentNaive)->Arg(6)->Arg(7)->Arg(8);

void BM_PermanentRyser(benchmark::State& state) {
  const Matrix a = pm_one_matrix(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(skewperm::permanent_ryser(a));
}
BENCHMARK(BM_PermanentRyser)->Arg(8)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_PermanentSkewEven(benchmark::State& state) {
  const SkewMatrix a(skew_matrix(static_cast<int>(state.range(0)), 11));
  for (auto _ : state) benchmark::DoNotOptimize(skewperm::permanent_skew_even(a));
}
BENCHMARK(BM_PermanentSkewEven)->Arg(6)->Arg(8)->Arg(10);

void BM_PermanentCycleCover(benchmark::State& state) {
  const Matrix a = pm_one_matrix(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(skewperm::permanent_cycle_cover(a));
}
BENCHMARK(BM_PermanentCycleCover)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
