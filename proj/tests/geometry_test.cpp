#include <gtest/gtest.h>

#include <random>

#include "planegraph/geometry.hpp"
#include "test_support.hpp"

namespace planegraph {
namespace {

Point P(std::int64_t x, std::int64_t y) { return {x, y, 0}; }

TEST(Orientation, BasicTurns) {
  EXPECT_EQ(orientation(P(0, 0), P(1, 0), P(0, 1)), Orientation::CCW);
  EXPECT_EQ(orientation(P(0, 0), P(1, 1), P(2, 2)), Orientation::Collinear);
  EXPECT_EQ(orientation(P(0, 0), P(0, 1), P(1, 0)), Orientation::CW);
}

TEST(Orientation, ExactAtCoordinateCap) {
  const std::int64_t c = kCoordinateCap;
  EXPECT_EQ(orientation(P(-c, -c), P(c, c - 1), P(c, c)), Orientation::CCW);
  EXPECT_EQ(orientation(P(-c, -c), P(c, c), P(0, 0)), Orientation::Collinear);
}

TEST(Orientation, CyclicAndAntisymmetric) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> coord(-1000, 1000);
  for (int t = 0; t < 5000; ++t) {
    const Point a = P(coord(rng), coord(rng)), b = P(coord(rng), coord(rng)), c = P(coord(rng), coord(rng));
    const auto o = static_cast<int>(orientation(a, b, c));
    EXPECT_EQ(o, static_cast<int>(orientation(b, c, a)));
    EXPECT_EQ(-o, static_cast<int>(orientation(b, a, c)));
    EXPECT_EQ(-o, static_cast<int>(orientation(a, c, b)));
  }
}

TEST(SegmentsCross, Examples) {
  EXPECT_TRUE(segments_cross(P(0, 0), P(2, 2), P(0, 2), P(2, 0)));
  EXPECT_FALSE(segments_cross(P(0, 0), P(1, 0), P(0, 0), P(0, 1)));
  EXPECT_FALSE(segments_cross(P(0, 0), P(1, 0), P(0, 1), P(1, 1)));
}

TEST(SegmentsCross, DegenerateInputRejected) {
  EXPECT_THROW(segments_cross(P(0, 0), P(2, 0), P(1, 0), P(1, 1)), ValidationError);
  EXPECT_THROW(segments_cross(P(0, 0), P(1, 0), P(2, 0), P(3, 0)), ValidationError);
}

TEST(SegmentsCross, SymmetricAndMatchesRationalOracle) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::int64_t> coord(-50, 50);
  int checked = 0;
  int crossings = 0;
  while (checked < 10000) {
    const Point a = P(coord(rng), coord(rng)), b = P(coord(rng), coord(rng)), c = P(coord(rng), coord(rng)),
                d = P(coord(rng), coord(rng));
    if (!validate_general_position({a, b, c, d}).ok()) continue;
    ++checked;
    const bool x = segments_cross(a, b, c, d);
    crossings += x;
    ASSERT_EQ(x, testing::rational_proper_crossing(a, b, c, d));
    ASSERT_EQ(x, segments_cross(c, d, a, b));
    ASSERT_EQ(x, segments_cross(b, a, c, d));
    ASSERT_EQ(x, segments_cross(a, b, d, c));
  }
  // Random 4-point configurations cross about a third of the time.
  EXPECT_GT(crossings, 1000);
}

TEST(GeneralPosition, Examples) {
  EXPECT_TRUE(validate_general_position({P(0, 0), P(1, 0), P(0, 1)}).ok());

  const auto collinear = validate_general_position({P(0, 0), P(1, 1), P(2, 2)});
  ASSERT_EQ(collinear.collinear.size(), 1U);
  EXPECT_EQ(collinear.collinear[0], (Triple{0, 1, 2}));

  const auto dup = validate_general_position({P(0, 0), P(0, 0), P(1, 1)});
  ASSERT_EQ(dup.duplicates.size(), 1U);
  EXPECT_EQ(dup.duplicates[0], std::make_pair(0, 1));
  EXPECT_FALSE(dup.ok());
}

TEST(GeneralPosition, ListsEveryViolatingTriple) {
  // Four collinear points: all four triples are reported.
  const auto r = validate_general_position({P(0, 0), P(1, 1), P(2, 2), P(3, 3), P(0, 5)});
  EXPECT_EQ(r.collinear.size(), 4U);
}

TEST(GeneralPosition, CoordinateCap) {
  const auto r = validate_general_position({P(0, 0), P(kCoordinateCap + 1, 0), P(0, 1)});
  EXPECT_EQ(r.out_of_range, std::vector<int>{1});
  EXPECT_THROW(PointSet::from_coordinates({{0, 0}, {kCoordinateCap + 1, 0}, {0, 1}}), ValidationError);
}

TEST(PointSet, RejectsDegenerateInput) {
  EXPECT_THROW(PointSet::from_coordinates({{0, 0}, {0, 0}, {1, 1}}), ValidationError);
  EXPECT_THROW(PointSet::from_coordinates({{0, 0}, {1, 1}, {2, 2}}), ValidationError);
}

TEST(PointSet, WithoutRelabels) {
  const auto ps = PointSet::from_coordinates({{0, 0}, {4, 0}, {0, 4}, {1, 1}});
  const auto rest = ps.without(1);
  ASSERT_EQ(rest.size(), 3);
  EXPECT_EQ(rest[1].x, 0);
  EXPECT_EQ(rest[1].y, 4);
  EXPECT_EQ(rest[2].label, 2);
}

TEST(ConvexHull, Examples) {
  EXPECT_EQ(convex_hull(PointSet::from_coordinates({{0, 0}, {4, 0}, {0, 4}})), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(convex_hull(PointSet::from_coordinates({{0, 0}, {4, 0}, {0, 4}, {1, 1}})), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(convex_hull(testing::unit_square()).size(), 4U);
  EXPECT_THROW(convex_hull(PointSet::from_coordinates({{0, 0}, {1, 0}})), ValidationError);
}

TEST(ConvexHull, CounterClockwiseAndContainsEverything) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 300; ++t) {
    const auto ps = testing::random_point_set(rng, 3 + t % 10);
    const auto hull = convex_hull(ps);
    const std::size_t h = hull.size();
    ASSERT_GE(h, 3U);
    EXPECT_EQ(hull.front(), *std::min_element(hull.begin(), hull.end()));
    for (std::size_t i = 0; i < h; ++i) {
      EXPECT_EQ(orientation(ps[hull[i]], ps[hull[(i + 1) % h]], ps[hull[(i + 2) % h]]), Orientation::CCW);
      // Every point is on the left of every hull edge (or is an endpoint).
      for (int p = 0; p < ps.size(); ++p) {
        if (p == hull[i] || p == hull[(i + 1) % h]) continue;
        EXPECT_EQ(orientation(ps[hull[i]], ps[hull[(i + 1) % h]], ps[p]), Orientation::CCW);
      }
    }
  }
}

TEST(TriangularHull, Examples) {
  EXPECT_TRUE(is_triangular_hull(PointSet::from_coordinates({{0, 0}, {10, 0}, {0, 10}, {1, 2}, {3, 1}})));
  EXPECT_FALSE(is_triangular_hull(testing::unit_square()));
  EXPECT_TRUE(is_triangular_hull(testing::triangle()));
}

TEST(PtsFormat, ParsesAndFormats) {
  const auto ps = parse_pts("3\n0 0\n4 0\n0 4\n");
  ASSERT_EQ(ps.size(), 3);
  EXPECT_EQ(ps[2].y, 4);
  EXPECT_EQ(format_pts(ps), "3\n0 0\n4 0\n0 4\n");
  EXPECT_EQ(parse_pts(format_pts(ps)).points(), ps.points());
}

TEST(PtsFormat, Errors) {
  EXPECT_THROW(parse_pts(""), ValidationError);
  EXPECT_THROW(parse_pts("3\n0 0\n4 0\n"), ValidationError);
  EXPECT_THROW(parse_pts("2\n0 0\n4 x\n"), ValidationError);
  EXPECT_THROW(parse_pts("2\n0 0 1\n4 0\n"), ValidationError);
  EXPECT_THROW(parse_pts("3\n0 0\n1 1\n2 2\n"), ValidationError);
  // Raw parsing keeps degenerate sets for reporting.
  EXPECT_EQ(parse_pts_points("3\n0 0\n1 1\n2 2\n").size(), 3U);
}

TEST(Fingerprint, StableAndDiscriminating) {
  EXPECT_EQ(fingerprint(testing::triangle()), fingerprint(parse_pts("3\n0 0\n4 0\n0 4\n")));
  EXPECT_NE(fingerprint(testing::triangle()), fingerprint(testing::unit_square()));
  EXPECT_EQ(fingerprint(testing::triangle()).size(), 16U);
}

}  // namespace
}  // namespace planegraph
