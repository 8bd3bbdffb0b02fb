#pragma once

#include <memory>
#include <span>
#include <string>

#include "circledom/graph.hpp"
#include "circledom/rooted_tree.hpp"

namespace circledom {

enum class VariantKind {
  Plain,
  Connected,
  Total,
  Independent,
  Acyclic,
  ConnectedAcyclic,
  GivenTree,
  FixedSizeTree,
};

class DominationVariant {
 public:
  static DominationVariant plain() { return DominationVariant(VariantKind::Plain); }
  static DominationVariant connected() { return DominationVariant(VariantKind::Connected); }
  static DominationVariant total() { return DominationVariant(VariantKind::Total); }
  static DominationVariant independent() { return DominationVariant(VariantKind::Independent); }
  static DominationVariant acyclic() { return DominationVariant(VariantKind::Acyclic); }
  static DominationVariant connected_acyclic() { return DominationVariant(VariantKind::ConnectedAcyclic); }
  static DominationVariant given_tree(RootedTree tree);
  // Throws std::invalid_argument for k < 1.
  static DominationVariant fixed_size_tree(int k);

  VariantKind kind() const { return kind_; }
  // Only meaningful for GivenTree.
  const RootedTree& tree() const { return *tree_; }
  const std::string& tree_code() const { return tree_code_; }
  // Only meaningful for FixedSizeTree.
  int tree_size() const { return k_; }

  std::string name() const;

 private:
  explicit DominationVariant(VariantKind kind) : kind_(kind) {}

  VariantKind kind_;
  std::shared_ptr<const RootedTree> tree_;
  std::string tree_code_;
  int k_ = 0;
};

bool verify_dominating(const Graph& g, std::span<const int> set);
bool verify_variant(const Graph& g, std::span<const int> set, const DominationVariant& variant);

}  // namespace circledom
