#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "circledom/graph.hpp"
#include "circledom/parse_error.hpp"

namespace circledom {

class RootedTree {
 public:
  RootedTree() = default;

  // parents[v] is v's parent, -1 for the root. Throws std::invalid_argument
  // unless this describes a single tree.
  static RootedTree from_parents(std::vector<int> parents);
  static RootedTree from_edges(int size, const std::vector<std::pair<int, int>>& edges, int root = 0);

  int size() const { return static_cast<int>(parent_.size()); }
  int root() const { return root_; }
  int parent(int v) const { return parent_[v]; }
  const std::vector<int>& parents() const { return parent_; }
  const std::vector<int>& children(int v) const { return children_[v]; }
  // Vertices ordered so that every parent precedes its children.
  const std::vector<int>& preorder() const { return order_; }

  RootedTree rerooted(int new_root) const;
  Graph as_graph() const;

 private:
  std::vector<int> parent_;
  std::vector<std::vector<int>> children_;
  std::vector<int> order_;
  int root_ = -1;
};

// Format: "t <size>" then <size> parent indices, 1-based, 0 for the root.
RootedTree parse_tree(std::string_view text);
std::string serialize_tree(const RootedTree& tree);

// AHU code of the subtree at v: "(" + sorted child codes + ")".
std::string canonical_code(const RootedTree& tree, int v);
std::vector<std::string> canonical_codes(const RootedTree& tree);

// Code of the unrooted tree, rooted at its center (smaller code for two centers).
std::string free_tree_code(const RootedTree& tree);
std::optional<std::string> free_tree_code(const Graph& g);

struct IsoClass {
  std::string code;
  int multiplicity = 0;
  std::vector<int> members;
};

// Children of v grouped by subtree isomorphism, sorted by code.
std::vector<IsoClass> child_iso_classes(const RootedTree& tree, int v);

struct AlphaReport {
  std::uint64_t value = 1;
  int root = 0;
  int vertex = 0;
};

// Product of (d_i + 1) over the child classes of v, for the tree's own root.
std::uint64_t alpha_at(const RootedTree& tree, int v);
// Maximum over vertices for the tree's root, or for `root` if given.
AlphaReport alpha_for_root(const RootedTree& tree, std::optional<int> root = std::nullopt);
// Maximum over all roots.
AlphaReport alpha(const RootedTree& tree);

// All multiplicity vectors (m_1..m_s) with 0 <= m_i <= d_i for the child
// classes of each vertex; entry v has exactly alpha_at(tree, v) vectors.
std::vector<std::vector<std::vector<int>>> enumerate_subforest_keys(const RootedTree& tree);

// A vertex whose removal leaves components of size at most size()/2.
int centroid(const RootedTree& tree);

}  // namespace circledom
