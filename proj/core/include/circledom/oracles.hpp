#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "circledom/domination.hpp"
#include "circledom/graph.hpp"
#include "circledom/rooted_tree.hpp"

namespace circledom {

// Graph with colors 1..k on its vertices.
struct ColoredGraph {
  Graph graph;
  std::vector<int> color;
  int k = 0;

  // Vertices of each color, index 0 holding color 1.
  std::vector<std::vector<int>> classes() const;
  bool balanced() const;
  bool has_monochromatic_edge() const;
};

struct ThreePartitionInstance {
  std::vector<int> values;
  int m = 0;
  int B = 0;

  // Derives B from the sum; throws std::invalid_argument when values.size() != 3m
  // or the sum is not a multiple of m.
  static ThreePartitionInstance make(std::vector<int> values, int m);
  // Human-readable reasons the bound B/4 < a_i < B/2 fails; empty when it holds.
  std::vector<std::string> bound_violations() const;
};

using Triple = std::array<int, 3>;

// Sets are sorted vertex lists. Enumeration is by size, then lexicographic.
std::optional<std::vector<int>> brute_min_dominating(const Graph& g, const DominationVariant& variant,
                                                     int kmax);
std::vector<std::vector<int>> brute_all_dominating_of_size(const Graph& g,
                                                           const DominationVariant& variant, int size);
// At most `size` vertices.
bool brute_exists_dominating_up_to(const Graph& g, const DominationVariant& variant, int size);

// One vertex per color, pairwise adjacent; listed by color.
std::optional<std::vector<int>> brute_colored_clique(const ColoredGraph& cg);

// Triples of values (not indices), each summing to B. Empty instances are
// rejected, and a sum that is not mB gives no partition.
std::optional<std::vector<Triple>> brute_3partition(const std::vector<int>& values, int m);
std::optional<std::vector<Triple>> brute_3partition(const ThreePartitionInstance& inst);

std::optional<std::vector<int>> brute_tree_dominating(const Graph& g, const RootedTree& tree);

}  // namespace circledom
