#include <gtest/gtest.h>

#include <cmath>

#include "planegraph/dyadic.hpp"
#include "planegraph/constructions.hpp"
#include "test_support.hpp"

namespace planegraph {
namespace {

TEST(ConvexChain, ShapeAndCounts) {
  const PointSet c = gen_convex_chain(5);
  ASSERT_EQ(c.size(), 5);
  for (int k = 0; k < 5; ++k) {
    EXPECT_EQ(c[k].x, k + 1);
    EXPECT_EQ(c[k].y, -(k + 1) * (k + 1));
  }
  EXPECT_EQ(convex_hull(c).size(), 5U);
  const long expected[] = {48, 352, 2880, 25216};
  for (int m = 4; m <= 7; ++m) {
    EXPECT_EQ(count_plane_graphs(Universe(gen_convex_chain(m))), expected[m - 4]);
    // Order type of convex position is unique: any convex polygon agrees.
    EXPECT_EQ(count_plane_graphs(Universe(gen_convex_chain(m))),
              count_plane_graphs(Universe(testing::regular_polygon(m))));
  }
}

TEST(CapWithApex, ShapeAndCertificate) {
  const PointSet p = gen_cap_with_apex(5);
  ASSERT_EQ(p.size(), 5);
  EXPECT_EQ(p[4].x, 0);
  EXPECT_GE(p[4].y, 4 * 16);
  EXPECT_TRUE(apex_certificate(p));
  EXPECT_TRUE(is_triangular_hull(p));
  for (int n = 4; n <= 9; ++n) EXPECT_TRUE(apex_certificate(gen_cap_with_apex(n))) << n;
  // A low apex sees chords cross its segments.
  EXPECT_FALSE(apex_certificate(PointSet::from_coordinates({{1, -1}, {2, -4}, {3, -9}, {4, -16}, {0, 1}})));
}

TEST(CapWithApex, ProductLaw) {
  for (int n = 4; n <= 7; ++n) {
    const mpz_class lhs = count_plane_graphs(Universe(gen_cap_with_apex(n)));
    const mpz_class rhs = (mpz_class(1) << static_cast<unsigned>(n - 1)) * count_plane_graphs(Universe(gen_convex_chain(n - 1)));
    EXPECT_EQ(lhs, rhs) << n;
    EXPECT_EQ(verify_product_law(n).status, ClaimStatus::Holds);
  }
}

TEST(CapWithApex, Vhat0BelowTheoremBound) {
  for (int n = 5; n <= 8; ++n) {
    const auto d = expected_degree_vector(Universe(gen_cap_with_apex(n)));
    EXPECT_LT(d.vhat(0), make_rational(11 * n, 112));
  }
}

TEST(TriangularHullRandom, DeterministicAndValid) {
  for (std::uint64_t seed : {0ULL, 1ULL, 42ULL}) {
    const PointSet a = gen_triangular_hull_random(7, seed);
    const PointSet b = gen_triangular_hull_random(7, seed);
    EXPECT_EQ(format_pts(a), format_pts(b));
    EXPECT_TRUE(is_triangular_hull(a));
    EXPECT_EQ(a[0].x, 0);
    EXPECT_EQ(a[1].x, 1000);
    EXPECT_EQ(a[2].y, 1000);
  }
  EXPECT_NE(format_pts(gen_triangular_hull_random(7, 1)), format_pts(gen_triangular_hull_random(7, 2)));
}

TEST(Generate, KindsByName) {
  EXPECT_EQ(parse_construction_kind("convex_chain"), ConstructionKind::ConvexChain);
  EXPECT_EQ(parse_construction_kind("cap_with_apex"), ConstructionKind::CapWithApex);
  EXPECT_EQ(parse_construction_kind("triangular_hull_random"), ConstructionKind::TriangularHullRandom);
  EXPECT_THROW(parse_construction_kind("spiral"), ValidationError);
  EXPECT_STREQ(to_string(ConstructionKind::CapWithApex), "cap_with_apex");
  EXPECT_EQ(format_pts(generate({ConstructionKind::ConvexChain, 4, 0})), format_pts(gen_convex_chain(4)));
}

TEST(FlajoletNoy, RatioTrend) {
  double previous = 1e9;
  for (int m = 5; m <= 8; ++m) {
    const double exact = count_plane_graphs(Universe(gen_convex_chain(m))).get_d();
    const double ratio = exact / flajolet_noy_approx(m);
    EXPECT_GE(ratio, 0.5);
    EXPECT_LE(ratio, 2.0);
    EXPECT_LE(std::fabs(ratio - 1), previous);
    previous = std::fabs(ratio - 1);
  }
  // Independent evaluation of the leading term.
  const double c = std::sqrt(99 * std::sqrt(2.0) - 140) / 4;
  EXPECT_NEAR(flajolet_noy_approx(10), c * std::pow(6 + 4 * std::sqrt(2.0), 10) / (std::sqrt(M_PI) * std::pow(10, 1.5)),
              1e-6 * flajolet_noy_approx(10));
}

TEST(ConstructionReport, Rows) {
  const auto rows = construction_report(7);
  ASSERT_EQ(rows.size(), 4U);
  EXPECT_EQ(rows[0].m, 4);
  EXPECT_EQ(rows[0].pg_convex, 48);
  EXPECT_NEAR(rows[0].growth, 48.0 / 8, 1e-12);
  EXPECT_NEAR(rows[1].growth, 352.0 / 48, 1e-12);
  for (const auto& r : rows) {
    EXPECT_EQ(r.pg_cap_apex, count_plane_graphs(Universe(gen_cap_with_apex(r.m))));
    EXPECT_NEAR(r.trend_2331, r.vhat0_cap_apex.get_d() * 23.31 / r.m, 1e-12);
  }
}

}  // namespace
}  // namespace planegraph
