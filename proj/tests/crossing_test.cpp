#include <gtest/gtest.h>

#include <random>

#include "planegraph/crossing.hpp"
#include "test_support.hpp"

namespace planegraph {
namespace {

TEST(EdgeSet, BitOperations) {
  EdgeSet e;
  EXPECT_TRUE(e.none());
  e.set(0);
  e.set(65);
  e.set(127);
  EXPECT_EQ(e.count(), 3);
  EXPECT_EQ(e.first(), 0);
  EXPECT_EQ(e.next(1), 65);
  EXPECT_EQ(e.next(66), 127);
  EXPECT_EQ(e.next(128), -1);
  e.reset(65);
  EXPECT_FALSE(e.test(65));
  EXPECT_EQ(EdgeSet::prefix(66).count(), 66);
  EXPECT_EQ(EdgeSet::prefix(0).count(), 0);
  EXPECT_EQ(EdgeSet::prefix(128).count(), 128);
  EXPECT_TRUE(EdgeSet::prefix(70).contains(EdgeSet{}.with(69)));
}

TEST(EdgeSet, HexEncoding) {
  EdgeSet e;
  e.set(0);
  e.set(4);
  EXPECT_EQ(e.to_hex(6), "11");
  EXPECT_EQ(EdgeSet{}.to_hex(3), "0");
  EXPECT_EQ(EdgeSet{}.with(65).to_hex(66), "20000000000000000");
  EXPECT_THROW(EdgeSet::from_hex("xyz"), std::invalid_argument);
  EXPECT_THROW(EdgeSet::from_hex(""), std::invalid_argument);
}

TEST(EdgeSet, HexRoundTripProperty) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 1000; ++t) {
    const int bits = 1 + static_cast<int>(rng() % 120);
    EdgeSet e;
    for (int k = 0; k < bits; ++k)
      if (rng() & 1U) e.set(k);
    EXPECT_EQ(EdgeSet::from_hex(e.to_hex(bits)), e);
  }
}

TEST(SegmentTable, Sizes) {
  const SegmentTable t3(testing::triangle());
  EXPECT_EQ(t3.size(), 3);
  EXPECT_EQ(t3.hull_edges().count(), 3);
  EXPECT_EQ(SegmentTable(testing::unit_square()).size(), 6);
  const SegmentTable t5(testing::regular_polygon(5));
  EXPECT_EQ(t5.size(), 10);
  EXPECT_EQ(t5.hull_edges().count(), 5);
}

TEST(SegmentTable, LexicographicIndexing) {
  std::mt19937_64 rng(3);
  const auto ps = testing::random_point_set(rng, 9);
  const SegmentTable t(ps);
  ASSERT_EQ(t.size(), 36);
  int k = 0;
  for (int i = 0; i < 9; ++i)
    for (int j = i + 1; j < 9; ++j, ++k) {
      EXPECT_EQ(t[k], std::make_pair(i, j));
      EXPECT_EQ(t.index_of(i, j), k);
      EXPECT_EQ(t.index_of(j, i), k);
    }
  for (int p = 0; p < 9; ++p) EXPECT_EQ(t.incident(p).count(), 8);
  EXPECT_THROW(t.index_of(2, 2), std::out_of_range);
}

TEST(SegmentTable, TooManyPoints) {
  std::mt19937_64 rng(4);
  const auto ps = testing::random_point_set(rng, kMaxSupportedPoints + 1, 200);
  EXPECT_THROW(SegmentTable{ps}, ValidationError);
}

TEST(CrossingSets, Examples) {
  const Universe tri(testing::triangle());
  EXPECT_EQ(tri.crossings().pair_count(), 0);

  const Universe sq(testing::unit_square());
  EXPECT_EQ(sq.crossings().pair_count(), 1);
  const int d02 = sq.segments().index_of(0, 2), d13 = sq.segments().index_of(1, 3);
  EXPECT_TRUE(sq.crossings()[d02].test(d13));

  // Oracle: every pair of segments checked directly in the test.
  const auto pent = testing::regular_polygon(5);
  long brute = 0;
  const SegmentTable t(pent);
  for (int a = 0; a < t.size(); ++a)
    for (int b = a + 1; b < t.size(); ++b) {
      const auto [i, j] = t[a];
      const auto [k, l] = t[b];
      brute += testing::rational_proper_crossing(pent[i], pent[j], pent[k], pent[l]);
    }
  EXPECT_EQ(brute, 5);
  EXPECT_EQ(Universe(pent).crossings().pair_count(), 5);
}

TEST(CrossingSets, StructuralInvariants) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 60; ++t) {
    const Universe u(testing::random_point_set(rng, 4 + t % 8));
    const auto& cs = u.crossings();
    const auto& tab = u.segments();
    for (int k = 0; k < u.segment_count(); ++k) {
      EXPECT_FALSE(cs[k].test(k));
      cs[k].for_each([&](int l) {
        EXPECT_TRUE(cs[l].test(k));
        const auto [a, b] = tab[k];
        const auto [c, d] = tab[l];
        EXPECT_TRUE(a != c && a != d && b != c && b != d);
      });
      if (tab.hull_edges().test(k)) EXPECT_TRUE(cs[k].none());
    }
    EXPECT_EQ(cs.pair_count(), testing::convex_quadruples(u.points()));
  }
}

TEST(Universe, VisibleSegments) {
  const Universe sq(testing::unit_square());
  const auto& t = sq.segments();
  // With diagonal (1,3) present, point 0 sees 1 and 3 only.
  const EdgeSet g = EdgeSet{}.with(t.index_of(1, 3));
  const EdgeSet vis = sq.visible_segments(g, 0);
  EXPECT_EQ(vis.count(), 2);
  EXPECT_FALSE(vis.test(t.index_of(0, 2)));
  EXPECT_EQ(sq.hull_size(), 4);
}

}  // namespace
}  // namespace planegraph
