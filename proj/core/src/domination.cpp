#include "circledom/domination.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace circledom {

DominationVariant DominationVariant::given_tree(RootedTree tree) {
  DominationVariant v(VariantKind::GivenTree);
  v.tree_code_ = free_tree_code(tree);
  v.k_ = tree.size();
  v.tree_ = std::make_shared<const RootedTree>(std::move(tree));
  return v;
}

DominationVariant DominationVariant::fixed_size_tree(int k) {
  if (k < 1) throw std::invalid_argument("tree size must be at least 1");
  DominationVariant v(VariantKind::FixedSizeTree);
  v.k_ = k;
  return v;
}

std::string DominationVariant::name() const {
  switch (kind_) {
    case VariantKind::Plain: return "plain";
    case VariantKind::Connected: return "connected";
    case VariantKind::Total: return "total";
    case VariantKind::Independent: return "independent";
    case VariantKind::Acyclic: return "acyclic";
    case VariantKind::ConnectedAcyclic: return "conn-acyclic";
    case VariantKind::GivenTree: return "tree";
    case VariantKind::FixedSizeTree: return "tree-size";
  }
  return "unknown";
}

bool verify_dominating(const Graph& g, std::span<const int> set) {
  VertexMask covered(g.size());
  for (int v : set) {
    covered.set(v);
    covered |= g.neighborhood(v);
  }
  return covered.all();
}

bool verify_variant(const Graph& g, std::span<const int> set, const DominationVariant& variant) {
  for (int v : set)
    if (v < 0 || v >= g.size()) return false;
  std::vector<int> members(set.begin(), set.end());
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end()) return false;
  if (!verify_dominating(g, members)) return false;

  const int size = static_cast<int>(members.size());
  auto components = [&] { return component_count(g, members); };
  auto edges = [&] { return induced_edge_count(g, members); };
  auto is_tree = [&] { return size > 0 && components() == 1 && edges() == size - 1; };

  switch (variant.kind()) {
    case VariantKind::Plain:
      return true;
    case VariantKind::Connected:
      return size > 0 && components() == 1;
    case VariantKind::Total:
      return std::all_of(members.begin(), members.end(), [&](int v) {
        return std::any_of(members.begin(), members.end(), [&](int w) { return g.adjacent(v, w); });
      });
    case VariantKind::Independent:
      return edges() == 0;
    case VariantKind::Acyclic:
      return edges() + components() == size;
    case VariantKind::ConnectedAcyclic:
      return is_tree();
    case VariantKind::FixedSizeTree:
      return size == variant.tree_size() && is_tree();
    case VariantKind::GivenTree: {
      if (size != variant.tree_size() || !is_tree()) return false;
      auto code = free_tree_code(g.induced(members));
      return code && *code == variant.tree_code();
    }
  }
  return false;
}

}  // namespace circledom
