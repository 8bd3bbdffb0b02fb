#include <gtest/gtest.h>

#include "circledom/rooted_tree.hpp"
#include "tree_catalog.hpp"

using namespace circledom;
using circledom::test_support::path_tree;
using circledom::test_support::star_tree;

TEST(Tree, ParseAndSerialize) {
  auto t = parse_tree("t 4\n0 1 1 2\n");
  EXPECT_EQ(t.size(), 4);
  EXPECT_EQ(t.root(), 0);
  EXPECT_EQ(t.children(0).size(), 2u);
  EXPECT_EQ(serialize_tree(t), "t 4\n0 1 1 2\n");
  EXPECT_THROW(parse_tree("t 2\n0 0\n"), ParseError);
  EXPECT_THROW(parse_tree("t 2\n2 1\n"), ParseError);
  EXPECT_THROW(parse_tree("t 3\n0 1\n"), ParseError);
  EXPECT_THROW(parse_tree("n 1\n0\n"), ParseError);
}

TEST(Tree, FromEdgesAndReroot) {
  auto t = RootedTree::from_edges(3, {{0, 1}, {1, 2}}, 1);
  EXPECT_EQ(t.root(), 1);
  EXPECT_EQ(t.children(1).size(), 2u);
  auto r = t.rerooted(2);
  EXPECT_EQ(r.root(), 2);
  EXPECT_EQ(r.parent(1), 2);
  EXPECT_THROW(RootedTree::from_edges(3, {{0, 1}, {0, 1}}), std::invalid_argument);
}

TEST(Code, Examples) {
  auto single = RootedTree::from_parents({-1});
  EXPECT_EQ(canonical_code(single, 0), "()");
  // Same shape, different labels.
  auto t1 = RootedTree::from_parents({-1, 0, 0, 1});
  auto t2 = RootedTree::from_parents({2, 2, -1, 1});
  EXPECT_EQ(canonical_code(t1, t1.root()), canonical_code(t2, t2.root()));
  auto end = path_tree(3);
  auto center = end.rerooted(1);
  EXPECT_NE(canonical_code(end, end.root()), canonical_code(center, center.root()));
}

TEST(Code, AgreesWithSlowIsomorphism) {
  std::vector<std::pair<RootedTree, int>> subtrees;
  for (int t = 1; t <= 7; ++t)
    for (const auto& tree : circledom::test_support::increasing_trees(t)) subtrees.emplace_back(tree, tree.root());
  // Sample pairs among the 1+1+2+6+24+120+720 rooted trees; same-size pairs only.
  for (std::size_t i = 0; i < subtrees.size(); i += 7) {
    for (std::size_t j = i; j < subtrees.size(); j += 5) {
      const auto& [a, ra] = subtrees[i];
      const auto& [b, rb] = subtrees[j];
      if (a.size() != b.size()) continue;
      EXPECT_EQ(canonical_code(a, ra) == canonical_code(b, rb), circledom::test_support::rooted_isomorphic_slow(a, ra, b, rb));
    }
  }
}

TEST(Classes, Examples) {
  auto star = star_tree(5);
  auto classes = child_iso_classes(star, 0);
  ASSERT_EQ(classes.size(), 1u);
  EXPECT_EQ(classes[0].multiplicity, 4);
  // Children: leaf, leaf, and a vertex with one leaf.
  auto t = RootedTree::from_parents({-1, 0, 0, 0, 3});
  classes = child_iso_classes(t, 0);
  ASSERT_EQ(classes.size(), 2u);
  EXPECT_EQ(classes[0].multiplicity + classes[1].multiplicity, 3);
  EXPECT_TRUE(child_iso_classes(t, 4).empty());
}

TEST(Alpha, Examples) {
  EXPECT_EQ(alpha(RootedTree::from_parents({-1})).value, 1u);
  EXPECT_EQ(alpha(star_tree(5)).value, 5u);
  EXPECT_EQ(alpha(path_tree(5)).value, 4u);
  EXPECT_EQ(alpha(path_tree(3)).value, 3u);
  EXPECT_EQ(alpha_for_root(path_tree(5)).value, 2u);
  auto report = alpha(path_tree(5));
  EXPECT_EQ(alpha_at(path_tree(5).rerooted(report.root), report.vertex), 4u);
}

TEST(Keys, CountsMatchAlpha) {
  auto star = star_tree(5);
  auto keys = enumerate_subforest_keys(star);
  EXPECT_EQ(keys[0].size(), 5u);
  EXPECT_EQ(keys[1].size(), 1u);
  auto t = RootedTree::from_parents({-1, 0, 0, 0, 3});
  EXPECT_EQ(enumerate_subforest_keys(t)[0].size(), 6u);
  for (const auto& tree : circledom::test_support::free_trees(8)) {
    auto all = enumerate_subforest_keys(tree);
    for (int v = 0; v < tree.size(); ++v) EXPECT_EQ(all[v].size(), alpha_at(tree, v));
  }
}

TEST(Centroid, SplitsEvenly) {
  for (int t = 1; t <= 9; ++t)
    for (const auto& tree : circledom::test_support::free_trees(t)) {
      auto rooted = tree.rerooted(centroid(tree));
      for (int c : rooted.children(rooted.root())) {
        int size = 0;
        std::vector<int> stack{c};
        while (!stack.empty()) {
          int x = stack.back();
          stack.pop_back();
          ++size;
          for (int y : rooted.children(x)) stack.push_back(y);
        }
        EXPECT_LE(2 * size, t);
      }
    }
}

TEST(FreeTrees, KnownCounts) {
  const std::size_t counts[] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
  for (int t = 1; t <= 10; ++t) EXPECT_EQ(circledom::test_support::free_trees(t).size(), counts[t]);
}
