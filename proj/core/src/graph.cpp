#include "circledom/graph.hpp"

#include <stdexcept>
#include <string>

namespace circledom {

Graph::Graph(int n) : adjacency_(n), rows_(n, VertexMask(n)) {}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= size() || v >= size())
    throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + "-" +
                                std::to_string(v));
  if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
  if (rows_[u].test(v)) return;
  rows_[u].set(v);
  rows_[v].set(u);
  adjacency_[u].push_back(v);
  adjacency_[v].push_back(u);
  ++edges_;
}

Graph Graph::induced(std::span<const int> vertices) const {
  Graph sub(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (adjacent(vertices[i], vertices[j])) sub.add_edge(static_cast<int>(i), static_cast<int>(j));
  return sub;
}

int component_count(const Graph& g, std::span<const int> vertices) {
  VertexMask inside(g.size());
  for (int v : vertices) inside.set(v);
  VertexMask seen(g.size());
  int components = 0;
  std::vector<int> stack;
  for (int start : vertices) {
    if (seen.test(start)) continue;
    ++components;
    seen.set(start);
    stack.push_back(start);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (inside.test(w) && !seen.test(w)) {
          seen.set(w);
          stack.push_back(w);
        }
      }
    }
  }
  return components;
}

int induced_edge_count(const Graph& g, std::span<const int> vertices) {
  int edges = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (g.adjacent(vertices[i], vertices[j])) ++edges;
  return edges;
}

}  // namespace circledom
