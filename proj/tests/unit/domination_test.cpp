#include <gtest/gtest.h>

#include "circledom/domination.hpp"
#include "circledom/chord_diagram.hpp"
#include "tree_catalog.hpp"

using namespace circledom;

namespace {

// a-b-c-d as 0-1-2-3.
Graph p4() {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  return g;
}

}  // namespace

TEST(Graph, Basics) {
  Graph g = p4();
  EXPECT_EQ(g.edge_count(), 3);
  g.add_edge(1, 0);
  EXPECT_EQ(g.edge_count(), 3);
  EXPECT_THROW(g.add_edge(2, 2), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 4), std::invalid_argument);
  std::vector<int> ends{0, 3};
  EXPECT_EQ(component_count(g, ends), 2);
  EXPECT_EQ(component_count(g, std::vector<int>{}), 0);
}

TEST(Dominating, Examples) {
  Graph g = p4();
  EXPECT_TRUE(verify_dominating(g, std::vector<int>{1, 2}));
  EXPECT_FALSE(verify_dominating(g, std::vector<int>{1}));
  EXPECT_TRUE(verify_dominating(g, std::vector<int>{0, 1, 2, 3}));
}

TEST(Variant, Examples) {
  Graph g = p4();
  EXPECT_TRUE(verify_variant(g, std::vector<int>{1, 2}, DominationVariant::connected()));
  EXPECT_TRUE(verify_variant(g, std::vector<int>{0, 3}, DominationVariant::independent()));
  EXPECT_TRUE(verify_variant(g, std::vector<int>{1, 2}, DominationVariant::given_tree(test_support::path_tree(2))));
  EXPECT_FALSE(verify_variant(g, std::vector<int>{1, 2}, DominationVariant::given_tree(test_support::star_tree(4))));
  EXPECT_FALSE(verify_variant(g, std::vector<int>{0, 3}, DominationVariant::connected()));
  EXPECT_FALSE(verify_variant(g, std::vector<int>{0, 3}, DominationVariant::total()));
  EXPECT_TRUE(verify_variant(g, std::vector<int>{0, 1, 2, 3}, DominationVariant::total()));
  EXPECT_TRUE(verify_variant(g, std::vector<int>{0, 1, 2}, DominationVariant::fixed_size_tree(3)));
  EXPECT_FALSE(verify_variant(g, std::vector<int>{0, 1, 2}, DominationVariant::fixed_size_tree(2)));
  EXPECT_FALSE(verify_variant(g, std::vector<int>{1, 1, 2}, DominationVariant::plain()));
  EXPECT_THROW(DominationVariant::fixed_size_tree(0), std::invalid_argument);
}

TEST(Variant, EmptySet) {
  Graph empty(0);
  std::vector<int> none;
  EXPECT_TRUE(verify_variant(empty, none, DominationVariant::plain()));
  EXPECT_TRUE(verify_variant(empty, none, DominationVariant::independent()));
  EXPECT_FALSE(verify_variant(empty, none, DominationVariant::connected()));
  EXPECT_FALSE(verify_variant(empty, none, DominationVariant::connected_acyclic()));
}

TEST(Variant, CycleIsNotAcyclic) {
  auto g = build_intersection_graph(parse_representation("3\na b c a b c"));
  EXPECT_FALSE(verify_variant(g, std::vector<int>{0, 1, 2}, DominationVariant::acyclic()));
  EXPECT_TRUE(verify_variant(g, std::vector<int>{0, 1}, DominationVariant::connected_acyclic()));
}

TEST(Variant, ConnectedAcyclicIsConjunction) {
  auto plain = DominationVariant::plain();
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto g = build_intersection_graph(random_representation(7, seed));
    for (int mask = 0; mask < (1 << 7); ++mask) {
      std::vector<int> s;
      for (int v = 0; v < 7; ++v)
        if (mask >> v & 1) s.push_back(v);
      if (!verify_variant(g, s, plain)) continue;
      bool both = verify_variant(g, s, DominationVariant::connected()) &&
                  verify_variant(g, s, DominationVariant::acyclic());
      EXPECT_EQ(verify_variant(g, s, DominationVariant::connected_acyclic()), both);
    }
  }
}
