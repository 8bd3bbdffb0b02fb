#pragma once

// Test-only enumerations of small trees and a slow isomorphism check used to
// audit the canonical codes.

#include <vector>

#include "circledom/rooted_tree.hpp"

namespace circledom::test_support {

// One representative per isomorphism class of unrooted trees on t vertices.
std::vector<RootedTree> free_trees(int t);

// Every rooted tree on t vertices whose parent indices are smaller than the
// child; covers all rooted shapes, with repeats.
std::vector<RootedTree> increasing_trees(int t);

// Rooted isomorphism of tree1 at v1 and tree2 at v2 by trying all bijections.
bool rooted_isomorphic_slow(const RootedTree& tree1, int v1, const RootedTree& tree2, int v2);

// Paths and stars with vertex 0 as an end / the center.
RootedTree path_tree(int t);
RootedTree star_tree(int t);

}  // namespace circledom::test_support
