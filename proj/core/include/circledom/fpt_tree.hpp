#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "circledom/chord_diagram.hpp"
#include "circledom/rooted_tree.hpp"

namespace circledom {

struct FptStats {
  std::uint64_t entries = 0;
  std::uint64_t forest_keys = 0;  // interned child sub-multisets
  std::uint64_t alpha = 0;        // alpha of the tree for the chosen root
  int root = 0;
  double seconds = 0;
};

struct TreeEmbedding {
  std::vector<ChordId> chords;  // sorted
  std::vector<int> vertex_of;   // vertex_of[i] is the tree vertex of chords[i]
};

// A dominating set of chords inducing a copy of `tree`, with the isomorphism.
// The tree is rooted at a centroid unless `root` is given; the answer does not
// depend on the root.
std::optional<TreeEmbedding> fpt_tree_dominating(const CircleRepresentation& repr, const RootedTree& tree,
                                                 std::optional<int> root = std::nullopt,
                                                 FptStats* stats = nullptr);

}  // namespace circledom
