#include <gtest/gtest.h>

#include <algorithm>

#include "circledom/dominating_tree.hpp"
#include "circledom/oracles.hpp"

using namespace circledom;

namespace {

const char* kP4 = "4\na b a c b d c d";

std::vector<Region> names(const RegionTable& table) {
  std::vector<Region> out;
  for (const auto& [key, entry] : table.values()) {
    out.push_back(entry.first);
    out.push_back(entry.first.swapped());
  }
  return out;
}

// Applies T1 and T2 to every combination until nothing improves.
RegionTable naive_fixpoint(const CircleRepresentation& repr) {
  RegionTable table = init_regions(repr);
  bool changed = true;
  auto snapshot = [&] {
    std::vector<std::pair<int, int>> values;
    for (const auto& [key, entry] : table.values()) values.emplace_back(entry.second.forest, entry.second.tree);
    return std::pair{table.size(), values};
  };
  while (changed) {
    auto before = snapshot();
    auto regions = names(table);
    for (const auto& r1 : regions) {
      for (const auto& r2 : regions) try_combine_T1(repr, table, r1, r2);
      for (ChordId c = 0; c < repr.chord_count(); ++c) {
        try_combine_T2(repr, table, r1, std::nullopt, c);
        for (const auto& r2 : regions) try_combine_T2(repr, table, r1, r2, c);
      }
    }
    changed = snapshot() != before;
  }
  return table;
}

}  // namespace

TEST(Init, UnitRegions) {
  EXPECT_EQ(init_regions(parse_representation("2\na b a b")).size(), 2u);
  EXPECT_EQ(init_regions(CircleRepresentation{}).size(), 0u);
  auto repr = parse_representation("3\na b a c b c");
  auto table = init_regions(repr);
  EXPECT_EQ(table.size(), 3u);
  for (ChordId c = 0; c < 3; ++c) {
    EXPECT_EQ(table.forest_size(chord_region(repr, c)), 1);
    EXPECT_EQ(table.tree_size(chord_region(repr, c)), 1);
  }
}

TEST(Region, Names) {
  Region r{0, 7, 2, 5};
  EXPECT_EQ(r.swapped(), (Region{5, 2, 7, 0}));
  EXPECT_EQ(r.swapped().swapped(), r);
  EXPECT_TRUE(r.same_region(r.swapped()));
  EXPECT_TRUE(well_ordered(r, 8));
  EXPECT_TRUE(well_ordered(r.swapped(), 8));
}

TEST(T1, NestedPair) {
  auto repr = parse_representation("2\na b b a");
  auto table = init_regions(repr);
  Region outer = chord_region(repr, 0), inner = chord_region(repr, 1);
  auto result = try_combine_T1(repr, table, outer, inner);
  ASSERT_TRUE(result);
  EXPECT_EQ(result->first, (Region{0, 3, 1, 2}));
  EXPECT_EQ(result->second, 2);
  EXPECT_EQ(table.forest_size(result->first), 2);
  EXPECT_EQ(table.tree_size(result->first), kInfinity);
  auto g = build_intersection_graph(repr);
  EXPECT_TRUE(is_valid_for(repr, g, result->first, table.forest_witness(result->first), false));
  EXPECT_FALSE(try_combine_T1(repr, table, inner, outer));
}

TEST(T1, GapWithChord) {
  auto repr = parse_representation("3\na c c b b a");
  auto table = init_regions(repr);
  EXPECT_FALSE(try_combine_T1(repr, table, chord_region(repr, 0), chord_region(repr, 2)));
}

TEST(T2, CrossingPair) {
  auto repr = parse_representation("2\na b a b");
  auto table = init_regions(repr);
  auto result = try_combine_T2(repr, table, chord_region(repr, 0), std::nullopt, 1);
  ASSERT_TRUE(result);
  EXPECT_EQ(result->second, 2);
  EXPECT_TRUE(result->first.same_region(Region{2, 1, 0, 1}));
  EXPECT_EQ(table.tree_size(result->first), 2);
  EXPECT_EQ(table.forest_size(result->first), 2);
  auto g = build_intersection_graph(repr);
  EXPECT_TRUE(is_valid_for(repr, g, result->first, table.tree_witness(result->first), true));
}

TEST(T2, BlockedArc) {
  // Chord c sits between u and a, so (u, a) is not chord-free.
  auto repr = parse_representation("3\nb c c a b a");
  auto table = init_regions(repr);
  EXPECT_FALSE(try_combine_T2(repr, table, chord_region(repr, 2), std::nullopt, 0));
}

TEST(MinTree, Examples) {
  auto one = min_dominating_tree(parse_representation("2\na b a b"));
  ASSERT_TRUE(one);
  EXPECT_EQ(one->size, 1);
  EXPECT_FALSE(min_dominating_tree(parse_representation("2\na a b b")));
  EXPECT_FALSE(min_dominating_tree(CircleRepresentation{}));
  auto p4 = min_dominating_tree(parse_representation(kP4));
  ASSERT_TRUE(p4);
  EXPECT_EQ(p4->size, 2);
  EXPECT_EQ(p4->chords, (std::vector<ChordId>{1, 2}));
}

TEST(FixedSize, Examples) {
  auto repr = parse_representation(kP4);
  EXPECT_EQ(*dominating_tree_of_size(repr, 2), (std::vector<ChordId>{1, 2}));
  EXPECT_FALSE(dominating_tree_of_size(repr, 1));
  auto three = dominating_tree_of_size(repr, 3);
  ASSERT_TRUE(three);
  EXPECT_TRUE(*three == (std::vector<ChordId>{0, 1, 2}) || *three == (std::vector<ChordId>{1, 2, 3}));
  EXPECT_EQ(dominating_tree_sizes(repr), (std::vector<int>{2, 3, 4}));
  EXPECT_FALSE(dominating_tree_of_size(repr, 0));
  EXPECT_FALSE(dominating_tree_of_size(repr, 5));
}

TEST(Table, EntriesAreValidByDefinition) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto repr = random_representation(3 + static_cast<int>(seed % 5), seed);
    auto g = build_intersection_graph(repr);
    auto table = build_region_table(repr);
    for (const auto& [key, entry] : table.values()) {
      const auto& [region, value] = entry;
      ASSERT_NE(value.forest, kInfinity);
      EXPECT_LE(value.forest, value.tree);
      auto forest = table.forest_witness(region);
      EXPECT_EQ(static_cast<int>(forest.size()), value.forest);
      EXPECT_TRUE(is_valid_for(repr, g, region, forest, false));
      bool unit = region.a == region.c && region.d == region.b;
      EXPECT_EQ(value.forest == 1, unit);
      if (value.tree != kInfinity) {
        auto tree = table.tree_witness(region);
        EXPECT_EQ(static_cast<int>(tree.size()), value.tree);
        EXPECT_TRUE(is_valid_for(repr, g, region, tree, true));
      }
    }
  }
}

TEST(Table, EngineMatchesStepFunctions) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    auto repr = random_representation(2 + static_cast<int>(seed % 3), seed);
    auto fast = build_region_table(repr);
    auto slow = naive_fixpoint(repr);
    ASSERT_EQ(fast.size(), slow.size()) << serialize_representation(repr);
    for (const auto& [key, entry] : slow.values()) {
      EXPECT_EQ(fast.forest_size(entry.first), entry.second.forest);
      EXPECT_EQ(fast.tree_size(entry.first), entry.second.tree);
    }
  }
}

TEST(MinTree, MatchesOracleOnSmallDiagrams) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto repr = random_representation(3 + static_cast<int>(seed % 6), seed);
    auto g = build_intersection_graph(repr);
    auto expected = brute_min_dominating(g, DominationVariant::connected_acyclic(), repr.chord_count());
    auto got = min_dominating_tree(repr);
    ASSERT_EQ(got.has_value(), expected.has_value()) << serialize_representation(repr);
    if (got) {
      EXPECT_EQ(got->size, static_cast<int>(expected->size()));
      EXPECT_TRUE(verify_variant(g, got->chords, DominationVariant::connected_acyclic()));
    }
  }
}
