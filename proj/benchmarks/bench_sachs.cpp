// Orientation sweeps: a fresh Sachs enumeration per orientation versus
// the precomputed evaluator, and the full verification path on top.

#include <benchmark/benchmark.h>

#include <cstdint>

#include "skewperm/graph.hpp"
#include "skewperm/orientation.hpp"
#include "skewperm/sachs.hpp"
#include "skewperm/threads.hpp"
#include "skewperm/verify.hpp"

namespace {

using namespace skewperm;

// K5 less one edge: 5 vertices, 9 edges, cycle-rich.
Graph dense_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (!(i == 0 && j == 1)) edges.push_back({i, j});
  return Graph(5, std::move(edges));
}

void BM_SweepFreshAssembly(benchmark::State& state) {
  const Graph g = dense_graph();
  const std::uint64_t total = std::uint64_t(1) << g.edge_count();
  for (auto _ : state)
    for (std::uint64_t bits = 0; bits < total; ++bits)
      benchmark::DoNotOptimize(perm_poly_skew_sachs(OrientedGraph::from_bits(g, bits)));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(total));
}
BENCHMARK(BM_SweepFreshAssembly)->Unit(benchmark::kMillisecond);

void BM_SweepEvaluator(benchmark::State& state) {
  const Graph g = dense_graph();
  const SkewSachsEvaluator ev(g);
  const std::uint64_t total = std::uint64_t(1) << g.edge_count();
  for (auto _ : state)
    for (std::uint64_t bits = 0; bits < total; ++bits)
      benchmark::DoNotOptimize(ev.coefficients(bits));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(total));
}
BENCHMARK(BM_SweepEvaluator)->Unit(benchmark::kMillisecond);

void BM_VerifySamePoly(benchmark::State& state) {
  const Graph g = dense_graph();
  set_thread_budget_override(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_all_orientations_same(g));
  set_thread_budget_override(std::nullopt);
}
BENCHMARK(BM_VerifySamePoly)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
