#include "circledom/rooted_tree.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "circledom/chord_diagram.hpp"

namespace circledom {

RootedTree RootedTree::from_parents(std::vector<int> parents) {
  RootedTree tree;
  const int t = static_cast<int>(parents.size());
  if (t == 0) throw std::invalid_argument("tree must have at least one vertex");
  tree.children_.assign(t, {});
  for (int v = 0; v < t; ++v) {
    int p = parents[v];
    if (p == -1) {
      if (tree.root_ != -1) throw std::invalid_argument("tree has more than one root");
      tree.root_ = v;
    } else if (p < 0 || p >= t || p == v) {
      throw std::invalid_argument("bad parent index");
    } else {
      tree.children_[p].push_back(v);
    }
  }
  if (tree.root_ == -1) throw std::invalid_argument("tree has no root");
  tree.order_.push_back(tree.root_);
  for (std::size_t i = 0; i < tree.order_.size(); ++i)
    for (int c : tree.children_[tree.order_[i]]) tree.order_.push_back(c);
  if (static_cast<int>(tree.order_.size()) != t)
    throw std::invalid_argument("parent relation has a cycle");
  tree.parent_ = std::move(parents);
  return tree;
}

RootedTree RootedTree::from_edges(int size, const std::vector<std::pair<int, int>>& edges, int root) {
  if (size <= 0 || root < 0 || root >= size) throw std::invalid_argument("bad tree size or root");
  if (static_cast<int>(edges.size()) != size - 1)
    throw std::invalid_argument("a tree on t vertices has t-1 edges");
  std::vector<std::vector<int>> adj(size);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= size || v >= size || u == v) throw std::invalid_argument("bad edge");
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> parents(size, -2);
  parents[root] = -1;
  std::vector<int> stack{root};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : adj[x]) {
      if (parents[y] != -2) continue;
      parents[y] = x;
      stack.push_back(y);
    }
  }
  if (std::count(parents.begin(), parents.end(), -2) > 0)
    throw std::invalid_argument("edges do not form a connected tree");
  return from_parents(std::move(parents));
}

RootedTree RootedTree::rerooted(int new_root) const {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < size(); ++v)
    if (parent_[v] != -1) edges.emplace_back(v, parent_[v]);
  return from_edges(size(), edges, new_root);
}

Graph RootedTree::as_graph() const {
  Graph g(size());
  for (int v = 0; v < size(); ++v)
    if (parent_[v] != -1) g.add_edge(v, parent_[v]);
  return g;
}

RootedTree parse_tree(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line, tag;
  std::vector<long> values;
  bool header = false;
  long t = 0;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream words(line);
    if (!header) {
      if (!(words >> tag >> t) || tag != "t" || t <= 0) throw ParseError("malformed tree header");
      header = true;
      continue;
    }
    std::string word;
    while (words >> word) {
      long value = 0;
      auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
      if (ec != std::errc() || ptr != word.data() + word.size())
        throw ParseError("bad parent index '" + word + "'");
      values.push_back(value);
    }
  }
  if (!header) throw ParseError("missing tree header");
  if (static_cast<long>(values.size()) != t)
    throw ParseError("expected " + std::to_string(t) + " parent indices");
  std::vector<int> parents;
  for (long p : values) {
    if (p < 0 || p > t) throw ParseError("parent index out of range");
    parents.push_back(static_cast<int>(p) - 1);
  }
  try {
    return RootedTree::from_parents(std::move(parents));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string serialize_tree(const RootedTree& tree) {
  std::string out = "t " + std::to_string(tree.size()) + "\n";
  for (int v = 0; v < tree.size(); ++v) {
    if (v > 0) out += ' ';
    out += std::to_string(tree.parent(v) + 1);
  }
  return out + "\n";
}

std::vector<std::string> canonical_codes(const RootedTree& tree) {
  std::vector<std::string> code(tree.size());
  const auto& order = tree.preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    std::vector<std::string> parts;
    for (int c : tree.children(*it)) parts.push_back(code[c]);
    std::sort(parts.begin(), parts.end());
    std::string s = "(";
    for (auto& p : parts) s += p;
    code[*it] = s + ")";
  }
  return code;
}

std::string canonical_code(const RootedTree& tree, int v) { return canonical_codes(tree)[v]; }

namespace {

std::vector<int> centers(const RootedTree& tree) {
  const int t = tree.size();
  Graph g = tree.as_graph();
  std::vector<int> degree(t), layer;
  for (int v = 0; v < t; ++v) {
    degree[v] = g.degree(v);
    if (degree[v] <= 1) layer.push_back(v);
  }
  int remaining = t;
  while (remaining > 2) {
    std::vector<int> next;
    remaining -= static_cast<int>(layer.size());
    for (int v : layer)
      for (int w : g.neighbors(v))
        if (--degree[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  return layer;
}

}  // namespace

std::string free_tree_code(const RootedTree& tree) {
  std::string best;
  for (int c : centers(tree)) {
    auto code = canonical_code(tree.rerooted(c), c);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

std::optional<std::string> free_tree_code(const Graph& g) {
  if (g.size() == 0 || g.edge_count() != g.size() - 1) return std::nullopt;
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.size(); ++u)
    for (int v : g.neighbors(u))
      if (u < v) edges.emplace_back(u, v);
  try {
    return free_tree_code(RootedTree::from_edges(g.size(), edges));
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

std::vector<IsoClass> child_iso_classes(const RootedTree& tree, int v) {
  auto code = canonical_codes(tree);
  std::map<std::string, IsoClass> classes;
  for (int c : tree.children(v)) {
    auto& entry = classes[code[c]];
    entry.code = code[c];
    ++entry.multiplicity;
    entry.members.push_back(c);
  }
  std::vector<IsoClass> out;
  for (auto& [key, entry] : classes) out.push_back(std::move(entry));
  return out;
}

namespace {

std::uint64_t checked_mul(std::uint64_t x, std::uint64_t y) {
  if (y != 0 && x > std::numeric_limits<std::uint64_t>::max() / y)
    throw std::overflow_error("alpha exceeds 64 bits");
  return x * y;
}

// Per-vertex products for a tree, sharing one code computation.
std::vector<std::uint64_t> alpha_values(const RootedTree& tree) {
  auto code = canonical_codes(tree);
  std::vector<std::uint64_t> out(tree.size(), 1);
  for (int v = 0; v < tree.size(); ++v) {
    std::map<std::string, int> counts;
    for (int c : tree.children(v)) ++counts[code[c]];
    for (auto& [k, d] : counts) out[v] = checked_mul(out[v], static_cast<std::uint64_t>(d) + 1);
  }
  return out;
}

}  // namespace

std::uint64_t alpha_at(const RootedTree& tree, int v) { return alpha_values(tree)[v]; }

AlphaReport alpha_for_root(const RootedTree& tree, std::optional<int> root) {
  RootedTree rooted = root && *root != tree.root() ? tree.rerooted(*root) : tree;
  auto values = alpha_values(rooted);
  AlphaReport report{values[0], rooted.root(), 0};
  for (int v = 1; v < rooted.size(); ++v)
    if (values[v] > report.value) report = AlphaReport{values[v], rooted.root(), v};
  return report;
}

AlphaReport alpha(const RootedTree& tree) {
  AlphaReport best{0, 0, 0};
  for (int r = 0; r < tree.size(); ++r) {
    auto report = alpha_for_root(tree, r);
    if (report.value > best.value) best = report;
  }
  return best;
}

std::vector<std::vector<std::vector<int>>> enumerate_subforest_keys(const RootedTree& tree) {
  std::vector<std::vector<std::vector<int>>> out(tree.size());
  for (int v = 0; v < tree.size(); ++v) {
    auto classes = child_iso_classes(tree, v);
    std::vector<int> current(classes.size(), 0);
    // Mixed-radix counter over the multiplicities.
    while (true) {
      out[v].push_back(current);
      std::size_t i = 0;
      while (i < current.size() && current[i] == classes[i].multiplicity) current[i++] = 0;
      if (i == current.size()) break;
      ++current[i];
    }
  }
  return out;
}

int centroid(const RootedTree& tree) {
  const int t = tree.size();
  std::vector<int> sub(t, 1);
  const auto& order = tree.preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (tree.parent(*it) != -1) sub[tree.parent(*it)] += sub[*it];
  for (int v : order) {
    int largest = t - sub[v];
    for (int c : tree.children(v)) largest = std::max(largest, sub[c]);
    if (2 * largest <= t) return v;
  }
  return tree.root();
}

}  // namespace circledom
