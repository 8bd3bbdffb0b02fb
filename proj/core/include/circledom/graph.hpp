#pragma once

#include <span>
#include <vector>

#include "circledom/bitset.hpp"

namespace circledom {

// Simple undirected graph: irreflexive, symmetric adjacency.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int size() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return edges_; }

  // Throws std::invalid_argument on loops or out-of-range ids. Repeated edges are ignored.
  void add_edge(int u, int v);

  bool adjacent(int u, int v) const { return rows_[u].test(v); }
  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  const VertexMask& neighborhood(int v) const { return rows_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }

  // Subgraph induced by `vertices`; vertex i of the result is vertices[i].
  Graph induced(std::span<const int> vertices) const;

  bool operator==(const Graph& other) const { return rows_ == other.rows_; }

 private:
  std::vector<std::vector<int>> adjacency_;
  std::vector<VertexMask> rows_;
  int edges_ = 0;
};

// Number of connected components of G[vertices]; 0 for an empty set.
int component_count(const Graph& g, std::span<const int> vertices);

// Number of edges of G[vertices].
int induced_edge_count(const Graph& g, std::span<const int> vertices);

}  // namespace circledom
