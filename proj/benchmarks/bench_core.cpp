#include <benchmark/benchmark.h>

#include "hcg/analysis.hpp"
#include "hcg/dynamics.hpp"
#include "hcg/hypergraph.hpp"
#include "hcg/random.hpp"

using namespace hcg;

namespace {

Coloring random_coloring(SplitMix64& rng, std::size_t n, std::uint32_t k) {
  std::vector<Color> colors(n);
  for (Color& x : colors) x = static_cast<Color>(rng.below(k));
  return Coloring(k, std::move(colors));
}

GameKind kind_arg(const benchmark::State& state) {
  return state.range(0) == 0 ? GameKind::NonMonochromatic : GameKind::ConflictFree;
}

void BM_SocialWelfare(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(1));
  const Hypergraph h = gen_random_uniform(n, 4 * n, 4, 1);
  SplitMix64 rng(2);
  const Coloring c = random_coloring(rng, n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(social_welfare(h, c, kind_arg(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(h.total_degree()));
}
BENCHMARK(BM_SocialWelfare)->ArgsProduct({{0, 1}, {64, 1024, 16384}});

void BM_BestResponse(benchmark::State& state) {
  const Hypergraph h = gen_random_uniform(1024, 4096, 4, 3);
  SplitMix64 rng(4);
  const Coloring c = random_coloring(rng, h.num_vertices(), 5);
  Vertex v = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(best_response(h, c, v, kind_arg(state)));
    v = (v + 1) % static_cast<Vertex>(h.num_vertices());
  }
}
BENCHMARK(BM_BestResponse)->Arg(0)->Arg(1);

void BM_Dynamics(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(1));
  const Hypergraph h = gen_random_uniform(n, 3 * n, 3, 5);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    const BrTrace t = br_dynamics(h, 4, kind_arg(state), {RandomInit{++seed}, RoundRobin{}, std::nullopt});
    benchmark::DoNotOptimize(t.improving_steps);
  }
}
BENCHMARK(BM_Dynamics)->ArgsProduct({{0, 1}, {256, 4096}})->Unit(benchmark::kMillisecond);

void BM_ExactNmConstruction(benchmark::State& state) {
  const Hypergraph h = gen_nm_construction(3, 2).hypergraph;
  const bool canonical = state.range(0) != 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_analysis(h, 2, GameKind::NonMonochromatic, canonical).poa);
  }
}
BENCHMARK(BM_ExactNmConstruction)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_EnumerateCanonical(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    std::uint64_t count = 0;
    enumerate_colorings(n, 4, true, [&](const Coloring&) { return ++count, true; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateCanonical)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
