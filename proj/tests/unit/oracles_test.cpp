#include <gtest/gtest.h>

#include <algorithm>

#include "circledom/chord_diagram.hpp"
#include "circledom/oracles.hpp"
#include "tree_catalog.hpp"

using namespace circledom;

namespace {

Graph p4() { return build_intersection_graph(parse_representation("4\na b a c b d c d")); }
Graph triangle() { return build_intersection_graph(parse_representation("3\na b c a b c")); }

ColoredGraph two_by_two(bool edge) {
  ColoredGraph cg{Graph(4), {1, 1, 2, 2}, 2};
  if (edge) cg.graph.add_edge(0, 2);
  return cg;
}

}  // namespace

TEST(BruteMin, Examples) {
  auto plain = brute_min_dominating(p4(), DominationVariant::plain(), 4);
  ASSERT_TRUE(plain);
  EXPECT_EQ(plain->size(), 2u);
  auto two = build_intersection_graph(parse_representation("2\na a b b"));
  EXPECT_FALSE(brute_min_dominating(two, DominationVariant::connected_acyclic(), 2));
  EXPECT_EQ(brute_min_dominating(triangle(), DominationVariant::plain(), 3)->size(), 1u);
  EXPECT_FALSE(brute_min_dominating(p4(), DominationVariant::plain(), 1));
}

TEST(BruteAll, Examples) {
  auto sets = brute_all_dominating_of_size(p4(), DominationVariant::plain(), 2);
  // {a,d} dominates too: a covers b, d covers c.
  std::vector<std::vector<int>> expected{{0, 2}, {0, 3}, {1, 2}, {1, 3}};
  EXPECT_EQ(sets, expected);
  EXPECT_EQ(brute_all_dominating_of_size(triangle(), DominationVariant::plain(), 1).size(), 3u);
  auto independent = brute_all_dominating_of_size(p4(), DominationVariant::independent(), 2);
  std::vector<std::vector<int>> expected_independent{{0, 2}, {0, 3}, {1, 3}};
  EXPECT_EQ(independent, expected_independent);
}

TEST(BruteAll, PlainAtMostConnected) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    auto g = build_intersection_graph(random_representation(8, seed));
    auto plain = brute_min_dominating(g, DominationVariant::plain(), 8);
    auto connected = brute_min_dominating(g, DominationVariant::connected(), 8);
    ASSERT_TRUE(plain);
    if (connected) {
      EXPECT_LE(plain->size(), connected->size());
      EXPECT_TRUE(verify_variant(g, *connected, DominationVariant::connected()));
    }
  }
}

TEST(ColoredClique, Examples) {
  EXPECT_EQ(*brute_colored_clique(two_by_two(true)), (std::vector<int>{0, 2}));
  EXPECT_FALSE(brute_colored_clique(two_by_two(false)));
  ColoredGraph tri{Graph(6), {1, 1, 2, 2, 3, 3}, 3};
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v)
      if (tri.color[u] != tri.color[v]) tri.graph.add_edge(u, v);
  auto clique = brute_colored_clique(tri);
  ASSERT_TRUE(clique);
  EXPECT_EQ(clique->size(), 3u);
}

TEST(ThreePartition, Examples) {
  auto yes = brute_3partition({2, 2, 2, 2, 3, 3}, 2);
  ASSERT_TRUE(yes);
  for (const auto& t : *yes) EXPECT_EQ(t[0] + t[1] + t[2], 7);
  auto ones = ThreePartitionInstance::make({1, 1, 1, 1, 1, 1}, 2);
  EXPECT_TRUE(brute_3partition(ones));
  EXPECT_TRUE(ones.bound_violations().empty());
  EXPECT_FALSE(ThreePartitionInstance::make({1, 1, 4, 2, 2, 2}, 2).bound_violations().empty());
  EXPECT_FALSE(brute_3partition({1, 1, 1, 1, 1, 2}, 2));
  EXPECT_FALSE(brute_3partition({4, 4, 4, 4, 4, 6}, 2));
  EXPECT_THROW(ThreePartitionInstance::make({1, 1, 1, 1, 1, 2}, 2), std::invalid_argument);
}

TEST(BruteTree, Examples) {
  auto single = RootedTree::from_parents({-1});
  EXPECT_TRUE(brute_tree_dominating(triangle(), single));
  EXPECT_EQ(*brute_tree_dominating(p4(), test_support::path_tree(2)), (std::vector<int>{1, 2}));
  EXPECT_FALSE(brute_tree_dominating(p4(), test_support::star_tree(4)));
}
