#include <gtest/gtest.h>

#include <random>
#include <set>

#include "planegraph/dyadic.hpp"
#include "planegraph/enumerate.hpp"
#include "test_support.hpp"

namespace planegraph {
namespace {

using testing::regular_polygon;
using testing::triangle;
using testing::unit_square;

TEST(EnumeratePlaneGraphs, VisitCounts) {
  EXPECT_EQ(enumerate_plane_graphs(Universe(triangle()), {}), 8);
  EXPECT_EQ(enumerate_plane_graphs(Universe(PointSet::from_coordinates({{5, 5}})), {}), 1);
  // 2^6 subsets minus the 2^4 containing both crossing diagonals.
  EXPECT_EQ(enumerate_plane_graphs(Universe(unit_square()), {}), 64 - 16);
}

TEST(EnumeratePlaneGraphs, EachGraphOnceInOrder) {
  const Universe u(regular_polygon(6));
  std::vector<PlaneGraph> seen;
  enumerate_plane_graphs(u, [&](const PlaneGraph& g) { seen.push_back(g); });
  EXPECT_TRUE(seen.front().edges.none());
  std::set<std::string> unique;
  for (const auto& g : seen) {
    EXPECT_TRUE(is_plane(u, g.edges));
    unique.insert(g.to_hex());
  }
  EXPECT_EQ(unique.size(), seen.size());

  std::vector<PlaneGraph> again;
  enumerate_plane_graphs(u, [&](const PlaneGraph& g) { again.push_back(g); });
  EXPECT_EQ(seen, again);
}

TEST(EnumeratePlaneGraphs, CapRefusal) {
  std::mt19937_64 rng(1);
  const Universe u(testing::random_point_set(rng, 13, 100));
  try {
    enumerate_plane_graphs(u, {});
    FAIL() << "expected refusal";
  } catch (const CapExceeded& e) {
    EXPECT_NE(std::string(e.what()).find("work estimate"), std::string::npos);
  }
  EnumerationLimits small;
  small.max_n = 4;
  EXPECT_THROW(count_plane_graphs(Universe(regular_polygon(5)), RunOptions{1, 8, small}), CapExceeded);
  small.force = true;
  EXPECT_EQ(count_plane_graphs(Universe(regular_polygon(5)), RunOptions{1, 8, small}), 352);
}

TEST(CountPlaneGraphs, MatchesBruteForceOracle) {
  EXPECT_EQ(count_plane_graphs_bruteforce(triangle()), 8);
  EXPECT_EQ(count_plane_graphs_bruteforce(unit_square()), 48);
  EXPECT_EQ(count_plane_graphs(Universe(regular_polygon(5))), count_plane_graphs_bruteforce(regular_polygon(5)));

  std::mt19937_64 rng(17);
  for (int t = 0; t < 40; ++t) {
    const auto ps = testing::random_point_set(rng, 3 + t % 4);
    EXPECT_EQ(count_plane_graphs(Universe(ps)), count_plane_graphs_bruteforce(ps)) << format_pts(ps);
  }
}

TEST(CountPlaneGraphs, BruteForceRefusesLargeInputs) {
  EXPECT_THROW(count_plane_graphs_bruteforce(regular_polygon(8)), CapExceeded);
}

TEST(CountPlaneGraphs, WorkerAndPrefixIndependence) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 6; ++t) {
    const Universe u(testing::random_point_set(rng, 6 + t % 3));
    const DegreeExpectation base = expected_degree_vector(u, {1, 0, {}});
    for (int workers : {1, 2, 8})
      for (int prefix : {0, 3, 8, 40}) {
        const DegreeExpectation d = expected_degree_vector(u, {workers, prefix, {}});
        EXPECT_EQ(d.pg, base.pg);
        EXPECT_EQ(d.ving_counts, base.ving_counts);
        EXPECT_EQ(d.total_edges, base.total_edges);
        EXPECT_EQ(count_plane_graphs(u, {workers, prefix, {}}), base.pg);
      }
  }
}

TEST(CountPlaneGraphs, SubtreesPartitionTheGraphs) {
  const Universe u(regular_polygon(6));
  std::uint64_t total = 0;
  for (std::uint64_t s = 0; s < subtree_count(u, 5); ++s)
    for_each_in_subtree(u, 5, s, [&](const EdgeSet& e, const Degrees&) {
      for (int t = 0; t < 5; ++t) EXPECT_EQ(e.test(t), ((s >> t) & 1U) != 0);
      ++total;
    });
  EXPECT_EQ(total, 2880U);
}

TEST(CountPlaneGraphs, InteriorPointStrictlyIncreases) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 10; ++t) {
    const auto base = testing::random_point_set(rng, 5);
    const auto hull = convex_hull(base);
    // Centroid of a hull triangle (scaled to stay on the lattice) lies strictly inside.
    std::vector<std::pair<std::int64_t, std::int64_t>> xy;
    for (const auto& p : base) xy.emplace_back(3 * p.x, 3 * p.y);
    const auto &a = base[hull[0]], &b = base[hull[1]], &c = base[hull[2]];
    xy.emplace_back(a.x + b.x + c.x, a.y + b.y + c.y);
    std::vector<Point> pts;
    for (const auto& [x, y] : xy) pts.push_back({x, y, 0});
    if (!validate_general_position(pts).ok()) continue;
    EXPECT_LT(count_plane_graphs(Universe(PointSet::from_coordinates({xy.begin(), xy.end() - 1}))),
              count_plane_graphs(Universe(PointSet::from_points(pts))));
  }
}

TEST(ExpectedDegrees, TriangleByDirectEnumeration) {
  // Oracle: all 8 subsets of the 3 triangle edges, degrees counted by hand.
  std::vector<long> ving(3, 0);
  for (int mask = 0; mask < 8; ++mask) {
    int deg[3] = {0, 0, 0};
    const int ends[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (int e = 0; e < 3; ++e)
      if (mask >> e & 1) ++deg[ends[e][0]], ++deg[ends[e][1]];
    for (int d : deg) ++ving[static_cast<std::size_t>(d)];
  }
  const DegreeExpectation d = expected_degree_vector(Universe(triangle()));
  EXPECT_EQ(d.pg, 8);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(d.ving_counts[static_cast<std::size_t>(i)], ving[static_cast<std::size_t>(i)]);
  EXPECT_EQ(d.vhat(0), make_rational(3, 4));
  EXPECT_EQ(d.vhat(1), make_rational(3, 2));
  EXPECT_EQ(d.vhat(2), make_rational(3, 4));
  EXPECT_EQ(d.vhat(5), 0);
}

TEST(ExpectedDegrees, SinglePoint) {
  const DegreeExpectation d = expected_degree_vector(Universe(PointSet::from_coordinates({{0, 0}})));
  EXPECT_EQ(d.pg, 1);
  EXPECT_EQ(d.vhat(0), 1);
}

TEST(ExpectedDegrees, Identities) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 25; ++t) {
    const Universe u(testing::random_point_set(rng, 3 + t % 6));
    const DegreeExpectation d = expected_degree_vector(u);
    mpz_class vings = 0, weighted = 0;
    mpq_class vhat_sum = 0;
    for (int i = 0; i < u.n(); ++i) {
      vings += d.ving_counts[static_cast<std::size_t>(i)];
      weighted += d.ving_counts[static_cast<std::size_t>(i)] * i;
      vhat_sum += d.vhat(i);
    }
    EXPECT_EQ(vings, d.pg * u.n());
    EXPECT_EQ(weighted, 2 * d.total_edges);
    EXPECT_EQ(vhat_sum, u.n());
  }
}

TEST(ExpectedDegrees, DeletionIdentity) {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 15; ++t) {
    const Universe u(testing::random_point_set(rng, 3 + t % 5));
    const DegreeExpectation d = expected_degree_vector(u);
    mpz_class rhs = 0;
    for (int q = 0; q < u.n(); ++q) rhs += count_plane_graphs(Universe(u.points().without(q)));
    EXPECT_EQ(d.ving_counts[0], rhs);
  }
}

TEST(Triangulation, IsTriangulationExamples) {
  const Universe tri(triangle());
  EXPECT_TRUE(is_triangulation(tri, EdgeSet::prefix(3)));
  EXPECT_FALSE(is_triangulation(tri, EdgeSet::prefix(2)));

  const Universe sq(unit_square());
  const auto& t = sq.segments();
  EdgeSet g;
  for (auto [i, j] : {std::pair{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}}) g.set(t.index_of(i, j));
  EXPECT_TRUE(is_triangulation(sq, g));
  EXPECT_EQ(g.count(), triangulation_edge_count(sq));
  EXPECT_EQ(triangulation_edge_count(sq), 3 * 4 - 3 - 4);
}

TEST(Triangulation, MaximalityMatchesEdgeCount) {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 20; ++t) {
    const Universe u(testing::random_point_set(rng, 3 + t % 5));
    const int target = triangulation_edge_count(u);
    for_each_plane_graph(u, [&](const EdgeSet& e, const Degrees&) {
      EXPECT_EQ(is_triangulation(u, e), e.count() == target);
    });
  }
}

TEST(Triangulation, ConvexCountsAreCatalan) {
  for (int m = 3; m <= 8; ++m) {
    const Universe u(regular_polygon(m));
    const TriangulationStats s = enumerate_triangulations(u);
    EXPECT_EQ(s.count, testing::catalan(m - 2)) << m;
    EXPECT_EQ(s.records.size(), s.count.get_ui());
  }
}

TEST(Triangulation, PrunedScanMatchesFilteredFullScan) {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 20; ++t) {
    const Universe u(testing::random_point_set(rng, 3 + t % 6));
    std::set<std::string> filtered;
    for_each_plane_graph(u, [&](const EdgeSet& e, const Degrees&) {
      if (is_triangulation(u, e)) filtered.insert(PlaneGraph{e, u.n()}.to_hex());
    });
    std::set<std::string> pruned;
    const auto stats = enumerate_triangulations(u, [&](const TriangulationRecord& r) {
      EXPECT_EQ(r.edges.count(), triangulation_edge_count(u));
      pruned.insert(PlaneGraph{r.edges, u.n()}.to_hex());
    });
    EXPECT_EQ(filtered, pruned);
    EXPECT_EQ(stats.count, filtered.size());
  }
}

TEST(Triangulation, RecordsCarryDegreeData) {
  const Universe u(PointSet::from_coordinates({{0, 0}, {10, 0}, {0, 10}, {2, 3}}));
  const auto stats = enumerate_triangulations(u);
  ASSERT_EQ(stats.count, 1);
  const auto& r = stats.records[0];
  EXPECT_EQ(r.v3, 4);  // K4 drawn with one interior point
  EXPECT_EQ(r.hull_degree3, 3);
  EXPECT_EQ(r.histogram[3], 4);
}

TEST(ContainingTriangulation, Examples) {
  const Universe tri(triangle());
  EXPECT_EQ(containing_triangulation(tri, {EdgeSet{}, 3}).edges, EdgeSet::prefix(3));

  const Universe sq(unit_square());
  const PlaneGraph t = containing_triangulation(sq, {EdgeSet{}, 4});
  EXPECT_TRUE(t.edges.test(sq.segments().index_of(0, 2)));
  EXPECT_FALSE(t.edges.test(sq.segments().index_of(1, 3)));
  EXPECT_EQ(t.edges.count(), 5);
  EXPECT_EQ(containing_triangulation(sq, t), t);
}

TEST(ContainingTriangulation, SupersetAndMaximal) {
  std::mt19937_64 rng(59);
  for (int t = 0; t < 10; ++t) {
    const Universe u(testing::random_point_set(rng, 4 + t % 4));
    for_each_plane_graph(u, [&](const EdgeSet& e, const Degrees&) {
      const PlaneGraph tri = containing_triangulation(u, {e, u.n()});
      EXPECT_TRUE(tri.edges.contains(e));
      EXPECT_TRUE(is_plane(u, tri.edges));
      EXPECT_TRUE(is_triangulation(u, tri.edges));
    });
  }
}

TEST(PlaneGraph, HexSerialization) {
  const Universe sq(unit_square());
  PlaneGraph g{EdgeSet{}, 4};
  g.edges.set(0);
  g.edges.set(5);
  EXPECT_EQ(g.to_hex(), "21");
  EXPECT_EQ(PlaneGraph::from_hex("21", 4), g);
}

}  // namespace
}  // namespace planegraph
