#include <benchmark/benchmark.h>

#include "baker/baker.hpp"

namespace {

using namespace baker;

void BM_PiStar(benchmark::State& state) {
  const Params params(0.6, 0.4);
  const SymbolWord word = sample_word(BernoulliSpec(0.5), static_cast<std::size_t>(state.range(0)), 1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(pi_star(word, params));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PiStar)->Arg(64)->Arg(1024);

void BM_MoranExponent(benchmark::State& state) {
  const Params params(0.2, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(moran_exponent(params));
}
BENCHMARK(BM_MoranExponent);

void BM_AttractorSample(benchmark::State& state) {
  const Params params(0.6, 0.55);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(attractor_sample(params, n, 7, natural_weights(params)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_AttractorSample)->Arg(1 << 14)->Arg(1 << 18)->Unit(benchmark::kMillisecond);

void BM_BoxCounts(benchmark::State& state) {
  const Params params(0.2, 0.3);
  const PointSet points = attractor_sample(params, static_cast<std::size_t>(state.range(0)), 7, natural_weights(params));
  for (auto _ : state) benchmark::DoNotOptimize(box_counts(points, 4, 10));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BoxCounts)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

void BM_CorrelationDimension(benchmark::State& state) {
  const PointSet points = product_sample(BernoulliSpec(0.5), Params(0.55, 0.55), 20'000, 64, 3);
  const auto radii = geometric_radii(0.1, 0.7071067811865476, 8);
  for (auto _ : state) benchmark::DoNotOptimize(correlation_dimension(points, radii, 1));
}
BENCHMARK(BM_CorrelationDimension)->Unit(benchmark::kMillisecond);

void BM_SupBernoulliBound(benchmark::State& state) {
  const Params params(0.6, 0.4);
  const auto grid = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sup_bernoulli_bound(params, grid));
}
BENCHMARK(BM_SupBernoulliBound)->Arg(101)->Arg(1001);

}  // namespace

BENCHMARK_MAIN();
