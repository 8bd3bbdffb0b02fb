#include "tree_catalog.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>

namespace circledom::test_support {

std::vector<RootedTree> free_trees(int t) {
  std::vector<RootedTree> layer{RootedTree::from_parents({-1})};
  for (int size = 2; size <= t; ++size) {
    std::vector<RootedTree> next;
    std::set<std::string> seen;
    for (const auto& tree : layer) {
      for (int v = 0; v < tree.size(); ++v) {
        auto parents = tree.parents();
        parents.push_back(v);
        auto grown = RootedTree::from_parents(parents);
        if (seen.insert(free_tree_code(grown)).second) next.push_back(grown);
      }
    }
    layer = std::move(next);
  }
  return t >= 1 ? layer : std::vector<RootedTree>{};
}

std::vector<RootedTree> increasing_trees(int t) {
  std::vector<RootedTree> out;
  std::vector<int> parents(t, -1);
  std::function<void(int)> fill = [&](int v) {
    if (v == t) {
      out.push_back(RootedTree::from_parents(parents));
      return;
    }
    for (int p = 0; p < v; ++p) {
      parents[v] = p;
      fill(v + 1);
    }
  };
  if (t >= 1) fill(1);
  return out;
}

namespace {

std::vector<int> subtree(const RootedTree& tree, int v) {
  std::vector<int> out{v};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (int c : tree.children(out[i])) out.push_back(c);
  return out;
}

}  // namespace

bool rooted_isomorphic_slow(const RootedTree& tree1, int v1, const RootedTree& tree2, int v2) {
  auto s1 = subtree(tree1, v1);
  auto s2 = subtree(tree2, v2);
  if (s1.size() != s2.size()) return false;
  std::vector<int> perm(s2.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (s2[perm[0]] != v2) continue;
    bool ok = true;
    for (std::size_t i = 1; i < s1.size() && ok; ++i) {
      int p1 = tree1.parent(s1[i]);
      auto at = std::find(s1.begin(), s1.end(), p1) - s1.begin();
      ok = tree2.parent(s2[perm[i]]) == s2[perm[at]];
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

RootedTree path_tree(int t) {
  std::vector<int> parents(t);
  for (int v = 0; v < t; ++v) parents[v] = v - 1;
  return RootedTree::from_parents(parents);
}

RootedTree star_tree(int t) {
  std::vector<int> parents(t, 0);
  parents[0] = -1;
  return RootedTree::from_parents(parents);
}

}  // namespace circledom::test_support
