#include <benchmark/benchmark.h>

#include "circledom/dominating_tree.hpp"
#include "circledom/fpt_tree.hpp"
#include "circledom/reductions.hpp"

using namespace circledom;

namespace {

// Random diagrams with a dominating tree, so the DP does not stop early on an
// isolated chord.
CircleRepresentation connected_diagram(int n) {
  for (std::uint64_t seed = 1;; ++seed) {
    auto repr = random_representation(n, seed);
    if (min_dominating_tree(repr)) return repr;
  }
}

void BM_MinDominatingTree(benchmark::State& state) {
  auto repr = connected_diagram(static_cast<int>(state.range(0)));
  DpStats stats;
  for (auto _ : state) benchmark::DoNotOptimize(min_dominating_tree(repr, &stats));
  state.counters["entries"] = static_cast<double>(stats.entries);
}
BENCHMARK(BM_MinDominatingTree)->Arg(10)->Arg(20)->Arg(40)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_TreeSizes(benchmark::State& state) {
  auto repr = connected_diagram(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dominating_tree_sizes(repr));
}
BENCHMARK(BM_TreeSizes)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_FptThreePartition(benchmark::State& state) {
  const int B = static_cast<int>(state.range(0));
  // Two triples (a, a, B - 2a) with a just above B/4.
  const int a = B / 4 + 1;
  auto inst = gen_tree_from_3partition(ThreePartitionInstance{{a, a, B - 2 * a, a, a, B - 2 * a}, 2, B});
  FptStats stats;
  for (auto _ : state) benchmark::DoNotOptimize(fpt_tree_dominating(inst.repr, *inst.tree, std::nullopt, &stats));
  state.counters["chords"] = inst.repr.chord_count();
  state.counters["alpha"] = static_cast<double>(stats.alpha);
}
BENCHMARK(BM_FptThreePartition)->Arg(7)->Arg(11)->Arg(13)->Unit(benchmark::kMillisecond);

void BM_DomsetGadgetDp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  ColoredGraph cg{Graph(2 * n), {}, 2};
  for (int v = 0; v < 2 * n; ++v) cg.color.push_back(v < n ? 1 : 2);
  for (int u = 0; u < n; ++u) cg.graph.add_edge(u, n + u);
  auto inst = gen_domset_from_kcc(cg);
  for (auto _ : state) benchmark::DoNotOptimize(min_dominating_tree(inst.repr));
  state.counters["chords"] = inst.repr.chord_count();
}
BENCHMARK(BM_DomsetGadgetDp)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
