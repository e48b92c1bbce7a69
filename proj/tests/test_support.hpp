#pragma once

// Random generators and brute-force oracles shared by the unit suites.
// Nothing here calls into the enumeration code it is used to check.

#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "planegraph/geometry.hpp"

namespace planegraph::testing {

/// n random lattice points in [-range, range]^2 in general position.
inline PointSet random_point_set(std::mt19937_64& rng, int n, std::int64_t range = 30) {
  std::uniform_int_distribution<std::int64_t> coord(-range, range);
  while (true) {
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) pts.push_back({coord(rng), coord(rng), i});
    if (validate_general_position(pts).ok()) return PointSet::from_points(pts);
  }
}

/// n points in convex position on a regular polygon of radius r (rounded).
inline PointSet regular_polygon(int n, double r = 1000.0) {
  std::vector<std::pair<std::int64_t, std::int64_t>> xy;
  for (int k = 0; k < n; ++k) {
    const double a = 2.0 * 3.14159265358979323846 * k / n;
    xy.emplace_back(static_cast<std::int64_t>(std::llround(r * std::cos(a))),
                    static_cast<std::int64_t>(std::llround(r * std::sin(a))));
  }
  return PointSet::from_coordinates(xy);
}

inline PointSet triangle() { return PointSet::from_coordinates({{0, 0}, {4, 0}, {0, 4}}); }
inline PointSet unit_square() { return PointSet::from_coordinates({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

/// Exact rational oracle: solves a + s(b-a) = c + t(d-c) and checks 0 < s, t < 1.
inline bool rational_proper_crossing(const Point& a, const Point& b, const Point& c, const Point& d) {
  const mpz_class rx = b.x - a.x, ry = b.y - a.y, sx = d.x - c.x, sy = d.y - c.y;
  const mpz_class den = rx * sy - ry * sx;
  if (den == 0) return false;  // parallel; general position rules out overlap
  const mpz_class qx = c.x - a.x, qy = c.y - a.y;
  mpq_class s(mpz_class(qx * sy - qy * sx), den);
  mpq_class t(mpz_class(qx * ry - qy * rx), den);
  s.canonicalize();
  t.canonicalize();
  return s > 0 && s < 1 && t > 0 && t < 1;
}

/// Point d strictly inside triangle abc (by signed areas).
inline bool inside_triangle(const Point& a, const Point& b, const Point& c, const Point& d) {
  auto area = [](const Point& p, const Point& q, const Point& r) {
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  };
  const auto s1 = area(a, b, d), s2 = area(b, c, d), s3 = area(c, a, d);
  return (s1 > 0 && s2 > 0 && s3 > 0) || (s1 < 0 && s2 < 0 && s3 < 0);
}

/// Number of 4-subsets in convex position (no point inside the other three's triangle).
inline long convex_quadruples(const PointSet& p) {
  long count = 0;
  const int n = p.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          const bool concave = inside_triangle(p[a], p[b], p[c], p[d]) || inside_triangle(p[a], p[b], p[d], p[c]) ||
                               inside_triangle(p[a], p[c], p[d], p[b]) || inside_triangle(p[b], p[c], p[d], p[a]);
          if (!concave) ++count;
        }
  return count;
}

/// Catalan numbers by the convolution recurrence.
inline mpz_class catalan(int k) {
  std::vector<mpz_class> c(static_cast<std::size_t>(k) + 1, 0);
  c[0] = 1;
  for (int i = 1; i <= k; ++i)
    for (int j = 0; j < i; ++j) c[static_cast<std::size_t>(i)] += c[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(i - 1 - j)];
  return c[static_cast<std::size_t>(k)];
}

}  // namespace planegraph::testing
