#include <benchmark/benchmark.h>

#include <random>

#include "lcd/conjecture.hpp"
#include "lcd/enumeration.hpp"
#include "lcd/field_expansion.hpp"
#include "lcd/linear_code.hpp"

namespace {

lcd::LinearCode random_code(std::size_t n, std::size_t k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  while (true) {
    lcd::BitMatrix g(k, n);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < n; ++j) g.set(i, j, (rng() & 1U) != 0);
    if (g.full_row_rank()) return lcd::LinearCode(g);
  }
}

void BM_Rank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = random_code(n, n / 2, 1).generator();
  for (auto _ : state) benchmark::DoNotOptimize(g.rank());
}
BENCHMARK(BM_Rank)->Arg(64)->Arg(256)->Arg(1024);

void BM_HullDimension(benchmark::State& state) {
  const auto c = random_code(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(0)) / 2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(lcd::hull_dimension(c));
}
BENCHMARK(BM_HullDimension)->Arg(32)->Arg(128);

void BM_DistanceFull(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const auto c = random_code(2 * k + 10, k, 3);
  for (auto _ : state) benchmark::DoNotOptimize(lcd::min_distance(c, lcd::DistanceEngine::full_enumeration));
}
BENCHMARK(BM_DistanceFull)->Arg(12)->Arg(18)->Arg(22)->Unit(benchmark::kMillisecond);

void BM_DistanceLowWeight(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto c = random_code(n, n - 12, 4);
  for (auto _ : state) benchmark::DoNotOptimize(lcd::min_distance(c, lcd::DistanceEngine::low_weight));
}
BENCHMARK(BM_DistanceLowWeight)->Arg(24)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_DlcdExact(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lcd::dlcd_exact(n, n / 2));
}
BENCHMARK(BM_DlcdExact)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_CertifyStepDown(benchmark::State& state) {
  const auto corpus = lcd::lcd_oe_corpus(static_cast<std::size_t>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(lcd::certify_step_down(corpus[i++ % corpus.size()]));
}
BENCHMARK(BM_CertifyStepDown)->Arg(10)->Arg(12);

void BM_ExpandF4(benchmark::State& state) {
  const auto f4 = lcd::ExtField::standard(2);
  const auto basis = lcd::find_self_dual_basis(f4);
  std::mt19937_64 rng(5);
  const auto c = lcd::random_ext_code(f4, 10, 5, rng);
  for (auto _ : state) benchmark::DoNotOptimize(lcd::expand_code(c, basis));
}
BENCHMARK(BM_ExpandF4);

}  // namespace

BENCHMARK_MAIN();
