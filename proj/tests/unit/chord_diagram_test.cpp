#include <gtest/gtest.h>

#include <set>

#include "circledom/chord_diagram.hpp"

using namespace circledom;

namespace {

ChordId id(const CircleRepresentation& r, const char* label) { return *r.find(label); }

}  // namespace

TEST(Parse, CrossingPair) {
  auto r = parse_representation("2\na b a b\n");
  EXPECT_EQ(r.chord_count(), 2);
  EXPECT_EQ(r.ends(id(r, "a")), (std::pair<Slot, Slot>{0, 2}));
  EXPECT_EQ(r.ends(id(r, "b")), (std::pair<Slot, Slot>{1, 3}));
}

TEST(Parse, DisjointPair) {
  auto r = parse_representation("2\na a b b");
  EXPECT_FALSE(chords_cross(r, 0, 1));
}

TEST(Parse, PathOfThree) {
  auto g = build_intersection_graph(parse_representation("3\na b a c b c"));
  EXPECT_EQ(g.edge_count(), 2);
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_TRUE(g.adjacent(1, 2));
  EXPECT_FALSE(g.adjacent(0, 2));
}

TEST(Parse, CommentsAndLineBreaks) {
  auto r = parse_representation("# header\n3\n# slots\na b a\nc b c\n");
  EXPECT_EQ(r.chord_count(), 3);
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_representation("x\na a"), ParseError);
  EXPECT_THROW(parse_representation("2\na a a b"), ParseError);
  EXPECT_THROW(parse_representation("2\na b c d"), ParseError);
  EXPECT_THROW(parse_representation("2\na a b"), ParseError);
  EXPECT_THROW(parse_representation(""), ParseError);
  EXPECT_THROW(parse_representation("2 3\na a b b"), ParseError);
}

TEST(Serialize, Examples) {
  EXPECT_EQ(serialize_representation(parse_representation("2\na b a b")), "2\na b a b\n");
  EXPECT_EQ(serialize_representation(CircleRepresentation{}), "0\n");
  EXPECT_EQ(serialize_representation(parse_representation("3\na b a c b c")), "3\na b a c b c\n");
}

TEST(Serialize, RoundTripRandom) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto r = random_representation(static_cast<int>(seed % 9), seed);
    EXPECT_EQ(parse_representation(serialize_representation(r)), r);
  }
}

TEST(Cross, Examples) {
  auto interleaved = parse_representation("2\na b a b");
  auto disjoint = parse_representation("2\na a b b");
  auto nested = parse_representation("2\na b b a");
  EXPECT_TRUE(chords_cross(interleaved, 0, 1));
  EXPECT_FALSE(chords_cross(disjoint, 0, 1));
  EXPECT_FALSE(chords_cross(nested, 0, 1));
  EXPECT_FALSE(chords_cross(interleaved, 0, 0));
  EXPECT_THROW(chords_cross(interleaved, 0, 2), std::out_of_range);
}

TEST(Cross, Triangle) {
  auto g = build_intersection_graph(parse_representation("3\na b c a b c"));
  EXPECT_EQ(g.edge_count(), 3);
}

TEST(Cross, GraphMatchesPairwiseTest) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto r = random_representation(8, seed);
    auto g = build_intersection_graph(r);
    for (ChordId x = 0; x < 8; ++x)
      for (ChordId y = 0; y < 8; ++y) {
        EXPECT_EQ(g.adjacent(x, y), chords_cross(r, x, y));
        EXPECT_EQ(chords_cross(r, x, y), chords_cross(r, y, x));
      }
  }
}

TEST(OpenArc, Examples) {
  EXPECT_TRUE(open_interval_chord_free(parse_representation("2\na b a b"), 0, 2));
  EXPECT_TRUE(open_interval_chord_free(parse_representation("2\na a b b"), 3, 1));
  EXPECT_FALSE(open_interval_chord_free(parse_representation("2\na b b a"), 0, 3));
  // (p, p) is the whole circle minus p.
  EXPECT_FALSE(open_interval_chord_free(parse_representation("2\na a b b"), 0, 0));
  EXPECT_TRUE(open_interval_chord_free(parse_representation("1\na a"), 0, 0));
}

TEST(OpenArc, IndexAgreesWithScan) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto r = random_representation(1 + static_cast<int>(seed % 8), seed);
    ArcIndex arcs(r);
    for (Slot p = 0; p < r.slot_count(); ++p)
      for (Slot q = 0; q < r.slot_count(); ++q) EXPECT_EQ(arcs.chord_free(p, q), open_interval_chord_free(r, p, q));
  }
}

TEST(Random, EmptyAndDeterministic) {
  EXPECT_EQ(random_representation(0, 7).chord_count(), 0);
  EXPECT_EQ(random_representation(5, 1), random_representation(5, 1));
  EXPECT_NE(serialize_representation(random_representation(12, 1)),
            serialize_representation(random_representation(12, 2)));
}

TEST(Random, EveryLabelTwice) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    auto r = random_representation(5, seed);
    std::multiset<ChordId> seen;
    for (Slot s = 0; s < r.slot_count(); ++s) seen.insert(r.chord_at(s));
    for (ChordId c = 0; c < 5; ++c) EXPECT_EQ(seen.count(c), 2u);
  }
}

TEST(Enumerate, MatchingCounts) {
  // (2n-1)!! perfect matchings.
  const int expected[] = {1, 1, 3, 15, 105};
  for (int n = 0; n <= 4; ++n) {
    int count = 0;
    std::set<std::string> distinct;
    for_each_representation(n, [&](const CircleRepresentation& r) {
      ++count;
      distinct.insert(serialize_representation(r));
    });
    EXPECT_EQ(count, expected[n]);
    EXPECT_EQ(static_cast<int>(distinct.size()), expected[n]);
  }
}

TEST(Labels, Spreadsheet) {
  EXPECT_EQ(default_label(0), "a");
  EXPECT_EQ(default_label(25), "z");
  EXPECT_EQ(default_label(26), "aa");
  EXPECT_EQ(default_label(27), "ab");
}
