#include "circledom/oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace circledom {

std::vector<std::vector<int>> ColoredGraph::classes() const {
  std::vector<std::vector<int>> out(k);
  for (int v = 0; v < graph.size(); ++v) out[color[v] - 1].push_back(v);
  return out;
}

bool ColoredGraph::balanced() const {
  auto cls = classes();
  return std::all_of(cls.begin(), cls.end(),
                     [&](const auto& c) { return !c.empty() && c.size() == cls.front().size(); });
}

bool ColoredGraph::has_monochromatic_edge() const {
  for (int u = 0; u < graph.size(); ++u)
    for (int v : graph.neighbors(u))
      if (color[u] == color[v]) return true;
  return false;
}

ThreePartitionInstance ThreePartitionInstance::make(std::vector<int> values, int m) {
  if (m <= 0 || static_cast<int>(values.size()) != 3 * m)
    throw std::invalid_argument("3-partition needs exactly 3m values");
  long sum = std::accumulate(values.begin(), values.end(), 0L);
  if (sum % m != 0) throw std::invalid_argument("sum is not a multiple of m");
  return ThreePartitionInstance{std::move(values), m, static_cast<int>(sum / m)};
}

std::vector<std::string> ThreePartitionInstance::bound_violations() const {
  std::vector<std::string> out;
  for (int a : values)
    if (!(4 * a > B && 2 * a < B))
      out.push_back(std::to_string(a) + " is not strictly between B/4 and B/2 (B=" + std::to_string(B) + ")");
  return out;
}

namespace {

// Calls `visit` on every size-`size` subset whose closed neighborhoods cover
// the graph, in lexicographic order; stops when `visit` returns false.
void for_each_dominating_subset(const Graph& g, int size,
                                const std::function<bool(const std::vector<int>&)>& visit) {
  const int n = g.size();
  if (size > n || size < 0) return;
  std::vector<VertexMask> closed(n, VertexMask(n));
  for (int v = 0; v < n; ++v) {
    closed[v] = g.neighborhood(v);
    closed[v].set(v);
  }
  // Union of closed neighborhoods of vertices >= v, for pruning.
  std::vector<VertexMask> suffix(n + 1, VertexMask(n));
  for (int v = n - 1; v >= 0; --v) suffix[v] = suffix[v + 1] | closed[v];

  std::vector<int> chosen;
  std::vector<VertexMask> covered{VertexMask(n)};
  bool stop = false;
  std::function<void(int)> extend = [&](int from) {
    if (stop) return;
    const int depth = static_cast<int>(chosen.size());
    if (depth == size) {
      if (covered.back().all() && !visit(chosen)) stop = true;
      return;
    }
    for (int v = from; v <= n - (size - depth) && !stop; ++v) {
      if (!(covered.back() | suffix[v]).all()) return;
      chosen.push_back(v);
      covered.push_back(covered.back() | closed[v]);
      extend(v + 1);
      covered.pop_back();
      chosen.pop_back();
    }
  };
  extend(0);
}

}  // namespace

std::vector<std::vector<int>> brute_all_dominating_of_size(const Graph& g,
                                                           const DominationVariant& variant, int size) {
  std::vector<std::vector<int>> out;
  for_each_dominating_subset(g, size, [&](const std::vector<int>& s) {
    if (verify_variant(g, s, variant)) out.push_back(s);
    return true;
  });
  return out;
}

std::optional<std::vector<int>> brute_min_dominating(const Graph& g, const DominationVariant& variant,
                                                     int kmax) {
  for (int size = 0; size <= std::min(kmax, g.size()); ++size) {
    std::optional<std::vector<int>> found;
    for_each_dominating_subset(g, size, [&](const std::vector<int>& s) {
      if (!verify_variant(g, s, variant)) return true;
      found = s;
      return false;
    });
    if (found) return found;
  }
  return std::nullopt;
}

bool brute_exists_dominating_up_to(const Graph& g, const DominationVariant& variant, int size) {
  return brute_min_dominating(g, variant, size).has_value();
}

std::optional<std::vector<int>> brute_colored_clique(const ColoredGraph& cg) {
  auto cls = cg.classes();
  std::vector<int> pick;
  std::function<bool(int)> choose = [&](int color) {
    if (color == cg.k) return true;
    for (int v : cls[color]) {
      bool ok = std::all_of(pick.begin(), pick.end(), [&](int u) { return cg.graph.adjacent(u, v); });
      if (!ok) continue;
      pick.push_back(v);
      if (choose(color + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  if (cg.k > 0 && choose(0)) return pick;
  return std::nullopt;
}

std::optional<std::vector<Triple>> brute_3partition(const std::vector<int>& values, int m) {
  if (m <= 0 || static_cast<int>(values.size()) != 3 * m) return std::nullopt;
  long sum = std::accumulate(values.begin(), values.end(), 0L);
  if (sum % m != 0) return std::nullopt;
  const int B = static_cast<int>(sum / m);
  std::vector<int> sorted = values;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  std::vector<bool> used(sorted.size(), false);
  std::vector<Triple> triples;
  // The largest unused value always opens the next triple; equal values are
  // tried once per position to avoid symmetric repeats.
  std::function<bool()> match = [&]() {
    auto first = std::find(used.begin(), used.end(), false);
    if (first == used.end()) return true;
    std::size_t i = static_cast<std::size_t>(first - used.begin());
    used[i] = true;
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      if (used[j] || (j > i + 1 && sorted[j] == sorted[j - 1] && !used[j - 1])) continue;
      used[j] = true;
      for (std::size_t l = j + 1; l < sorted.size(); ++l) {
        if (used[l] || sorted[i] + sorted[j] + sorted[l] != B) continue;
        used[l] = true;
        triples.push_back({sorted[i], sorted[j], sorted[l]});
        if (match()) return true;
        triples.pop_back();
        used[l] = false;
        break;
      }
      used[j] = false;
    }
    used[i] = false;
    return false;
  };
  if (match()) return triples;
  return std::nullopt;
}

std::optional<std::vector<Triple>> brute_3partition(const ThreePartitionInstance& inst) {
  long sum = std::accumulate(inst.values.begin(), inst.values.end(), 0L);
  if (sum != static_cast<long>(inst.m) * inst.B) return std::nullopt;
  return brute_3partition(inst.values, inst.m);
}

std::optional<std::vector<int>> brute_tree_dominating(const Graph& g, const RootedTree& tree) {
  auto variant = DominationVariant::given_tree(tree);
  std::optional<std::vector<int>> found;
  for_each_dominating_subset(g, tree.size(), [&](const std::vector<int>& s) {
    if (!verify_variant(g, s, variant)) return true;
    found = s;
    return false;
  });
  return found;
}

}  // namespace circledom
