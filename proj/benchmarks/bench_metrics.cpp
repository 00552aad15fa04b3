#include <benchmark/benchmark.h>

#include "flownet/analysis.hpp"
#include "flownet/betweenness.hpp"
#include "flownet/ingest.hpp"
#include "flownet/null_model.hpp"
#include "flownet/spectral.hpp"
#include "support/synthetic.hpp"

using namespace flownet;

namespace {

TimeSlice synthetic_slice(std::size_t nodes) {
  const auto events = synthetic::mixed_network(nodes, 2014, 1, 7);
  return slice(build_network(events, {2014, 2014}).network, 2014);
}

void BM_PageRank(benchmark::State& state) {
  const TimeSlice s = synthetic_slice(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pagerank(s));
  state.counters["edges"] = static_cast<double>(edge_count(s));
}
BENCHMARK(BM_PageRank)->Arg(50)->Arg(200)->Arg(800);

void BM_Hits(benchmark::State& state) {
  const TimeSlice s = synthetic_slice(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hits(s));
}
BENCHMARK(BM_Hits)->Arg(50)->Arg(200)->Arg(800);

void BM_Betweenness(benchmark::State& state) {
  const TimeSlice s = synthetic_slice(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(betweenness(s));
}
BENCHMARK(BM_Betweenness)->Arg(50)->Arg(200)->Arg(800);

void BM_ConfigurationModel(benchmark::State& state) {
  const TimeSlice s = synthetic_slice(static_cast<std::size_t>(state.range(0)));
  std::uint64_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(configuration_model(s, derive_seed(kDefaultSeed, k++)));
}
BENCHMARK(BM_ConfigurationModel)->Arg(50)->Arg(200)->Arg(800);

void BM_RankConditionedGini(benchmark::State& state) {
  const auto events = synthetic::mixed_network(static_cast<std::size_t>(state.range(0)), 2012, 5, 7);
  const TemporalNetwork net = build_network(events, {2012, 2016}).network;
  for (auto _ : state) benchmark::DoNotOptimize(rank_conditioned_gini(net, HitsRole::hub, Side::out));
}
BENCHMARK(BM_RankConditionedGini)->Arg(50)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
