#include "tasep/continuum.hpp"
#include "tasep/count.hpp"
#include "tasep/markov.hpp"
#include "tasep/mlq.hpp"
#include "tasep/rs.hpp"
#include "tasep/tableaux.hpp"

#include <benchmark/benchmark.h>

using namespace tasep;

static void BM_StationaryExact(benchmark::State& state) {
  const TypeVector t = TypeVector::ones(static_cast<int>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(markov::stationary_exact(t));
}
BENCHMARK(BM_StationaryExact)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_StationaryByRotation(benchmark::State& state) {
  const TypeVector t = TypeVector::ones(static_cast<int>(state.range(0)), 6);
  for (auto _ : state) benchmark::DoNotOptimize(markov::stationary_by_rotation(t));
}
BENCHMARK(BM_StationaryByRotation)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_BottomCounts(benchmark::State& state) {
  const TypeVector t = TypeVector::ones(3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count::bottom_counts(t));
}
BENCHMARK(BM_BottomCounts)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_GpiBrute(benchmark::State& state) {
  const count::PositionVector pos{{0, 2, 3, 5}, static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(count::G_pi_brute(Permutation::reverse(4), pos));
}
BENCHMARK(BM_GpiBrute)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_Gw0Determinant(benchmark::State& state) {
  std::vector<int> b;
  for (int i = 0; i < state.range(0); ++i) b.push_back(3 * i + 1);
  const count::PositionVector pos{b, 3 * static_cast<int>(state.range(0)) + 2};
  for (auto _ : state) benchmark::DoNotOptimize(count::G_w0_det(pos));
}
BENCHMARK(BM_Gw0Determinant)->Arg(4)->Arg(8)->Arg(16);

static void BM_LabelBottom(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  mlq::Rng rng(1);
  const auto a = mlq::sample_arrangement(n, rng);
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (auto _ : state) {
    continuum::label_bottom(a.order().data(), n, labels.data());
    benchmark::DoNotOptimize(labels.data());
  }
}
BENCHMARK(BM_LabelBottom)->Arg(4)->Arg(6)->Arg(8);

static void BM_CorrelationsMc(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(continuum::correlations_mc(6, state.range(0), 7));
}
BENCHMARK(BM_CorrelationsMc)->Arg(100000)->Unit(benchmark::kMillisecond);

static void BM_GPoly(benchmark::State& state) {
  const auto pi = Permutation::identity(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(continuum::g_poly(pi));
}
BENCHMARK(BM_GPoly)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_SsytHookContent(benchmark::State& state) {
  const tab::Partition lam({6, 4, 3, 2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(tab::ssyt_count_hook_content(lam, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SsytHookContent)->Arg(9)->Arg(50);

static void BM_SsytJacobiTrudi(benchmark::State& state) {
  const tab::Partition lam({6, 4, 3, 2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(tab::ssyt_count_jacobi_trudi(lam, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SsytJacobiTrudi)->Arg(9)->Arg(50);

static void BM_RsStationary(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rs::rs_stationary(static_cast<int>(state.range(0)), 1));
}
BENCHMARK(BM_RsStationary)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
