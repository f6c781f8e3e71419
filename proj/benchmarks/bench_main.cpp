#include <benchmark/benchmark.h>

#include "lindeg/arcs.hpp"
#include "lindeg/cells.hpp"
#include "lindeg/homalg.hpp"
#include "lindeg/named.hpp"
#include "lindeg/pbw.hpp"

using namespace lindeg;

static void BM_RankTuple(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto rep = canonical_rep(m_one(n));
  for (auto _ : state) benchmark::DoNotOptimize(rank_tuple(rep));
}
BENCHMARK(BM_RankTuple)->DenseRange(3, 7, 2);

static void BM_FlagComponents(benchmark::State& state) {
  const auto iso = m_two(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(flag_components(iso));
}
BENCHMARK(BM_FlagComponents)->DenseRange(2, 6, 2);

static void BM_FixedPoints(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto iso = m_two(n);
  for (auto _ : state) benchmark::DoNotOptimize(fixed_points(iso, DimVector::ramp(n)));
}
BENCHMARK(BM_FixedPoints)->DenseRange(2, 5);

static void BM_Poincare(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto iso = m_two(n);
  for (auto _ : state) benchmark::DoNotOptimize(poincare(iso, DimVector::ramp(n)));
}
BENCHMARK(BM_Poincare)->DenseRange(2, 5);

static void BM_CountPoints(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto iso = m_two(n);
  for (auto _ : state) benchmark::DoNotOptimize(count_points_fq(iso, DimVector::ramp(n), 2));
}
BENCHMARK(BM_CountPoints)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

static void BM_VerifySes(benchmark::State& state) {
  const auto diagrams = enumerate_arcs(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const auto& a : diagrams) benchmark::DoNotOptimize(verify_ses(a));
  }
}
BENCHMARK(BM_VerifySes)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_Demazure(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ProjSeq seq(n, {1});
  const auto w = weyl_word(seq);
  const auto lam = psi_weight(seq, Weight(static_cast<std::size_t>(n), 1));
  for (auto _ : state) benchmark::DoNotOptimize(demazure_dim(w, lam));
}
BENCHMARK(BM_Demazure)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
