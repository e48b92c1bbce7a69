#include "planegraph/constructions.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace planegraph {

ConstructionKind parse_construction_kind(const std::string& name) {
  if (name == "convex_chain") return ConstructionKind::ConvexChain;
  if (name == "cap_with_apex") return ConstructionKind::CapWithApex;
  if (name == "triangular_hull_random") return ConstructionKind::TriangularHullRandom;
  throw ValidationError("unknown construction kind '" + name + "'");
}

const char* to_string(ConstructionKind k) {
  switch (k) {
    case ConstructionKind::ConvexChain: return "convex_chain";
    case ConstructionKind::CapWithApex: return "cap_with_apex";
    case ConstructionKind::TriangularHullRandom: return "triangular_hull_random";
  }
  return "?";
}

PointSet gen_convex_chain(int m) {
  if (m < 3) throw ValidationError("convex_chain: m must be >= 3");
  if (static_cast<std::int64_t>(m) * m > kCoordinateCap) throw ValidationError("convex_chain: coordinate cap exceeded");
  std::vector<std::pair<std::int64_t, std::int64_t>> xy;
  for (std::int64_t k = 1; k <= m; ++k) xy.emplace_back(k, -k * k);
  return PointSet::from_coordinates(xy);
}

bool apex_certificate(const PointSet& points) {
  const int n = points.size();
  const int apex = n - 1;
  for (int i = 0; i < apex; ++i)
    for (int j = 0; j < apex; ++j)
      for (int k = j + 1; k < apex; ++k) {
        if (i == j || i == k) continue;
        if (segments_cross(points[apex], points[i], points[j], points[k])) return false;
      }
  return true;
}

PointSet gen_cap_with_apex(int n) {
  if (n < 4) throw ValidationError("cap_with_apex: n must be >= 4");
  const std::int64_t m = n - 1;
  if (m * m > kCoordinateCap) throw ValidationError("cap_with_apex: coordinate cap exceeded");
  std::vector<std::pair<std::int64_t, std::int64_t>> cap;
  for (std::int64_t k = 1; k <= m; ++k) cap.emplace_back(k, -k * k);

  for (std::int64_t h = 4 * m * m; h <= kCoordinateCap; h *= 2) {
    auto xy = cap;
    xy.emplace_back(0, h);
    PointSet candidate;
    try {
      candidate = PointSet::from_coordinates(xy);
    } catch (const ValidationError&) {
      continue;  // apex collinear with two cap points
    }
    if (apex_certificate(candidate) && is_triangular_hull(candidate)) return candidate;
  }
  throw ValidationError("cap_with_apex: no certified apex height within the coordinate cap");
}

PointSet gen_triangular_hull_random(int n, std::uint64_t seed) {
  if (n < 4) throw ValidationError("triangular_hull_random: n must be >= 4");
  constexpr std::int64_t kSide = 1000;
  constexpr int kBudget = 100000;
  std::mt19937_64 rng(seed);
  std::vector<Point> pts{{0, 0, 0}, {kSide, 0, 0}, {0, kSide, 0}};
  int attempts = 0;
  while (static_cast<int>(pts.size()) < n) {
    if (++attempts > kBudget) throw ValidationError("triangular_hull_random: rejection budget exhausted");
    // Raw engine output keeps the sequence identical across standard libraries.
    const Point p{static_cast<std::int64_t>(rng() % (kSide - 1)) + 1, static_cast<std::int64_t>(rng() % (kSide - 1)) + 1, 0};
    if (p.x + p.y >= kSide) continue;
    bool ok = true;
    for (std::size_t a = 0; a < pts.size() && ok; ++a) {
      if (pts[a] == p) ok = false;
      for (std::size_t b = a + 1; b < pts.size() && ok; ++b)
        if (orientation(pts[a], pts[b], p) == Orientation::Collinear) ok = false;
    }
    if (ok) pts.push_back(p);
  }
  return PointSet::from_points(std::move(pts));
}

PointSet generate(const ConstructionSpec& spec) {
  switch (spec.kind) {
    case ConstructionKind::ConvexChain: return gen_convex_chain(spec.n);
    case ConstructionKind::CapWithApex: return gen_cap_with_apex(spec.n);
    case ConstructionKind::TriangularHullRandom: return gen_triangular_hull_random(spec.n, spec.seed);
  }
  throw ValidationError("unknown construction kind");
}

double flajolet_noy_approx(int m) {
  if (m < 3) throw std::domain_error("flajolet_noy_approx: m must be >= 3");
  const double s2 = std::sqrt(2.0);
  const double c = 0.25 * std::sqrt(99.0 * s2 - 140.0);
  const double md = m;
  return c * std::pow(6.0 + 4.0 * s2, md) / (std::sqrt(M_PI) * md * std::sqrt(md));
}

VerificationReport verify_product_law(int n, const RunOptions& opts) {
  check_cap(n, opts.limits);
  const Universe apex(gen_cap_with_apex(n));
  const mpz_class lhs = count_plane_graphs(apex, opts);
  const mpz_class chain = count_plane_graphs(Universe(gen_convex_chain(n - 1)), opts);
  const mpz_class rhs = chain << static_cast<unsigned long>(n - 1);

  VerificationReport r;
  r.claim_id = "construction.product_law[n=" + std::to_string(n) + "]";
  r.descriptor = describe(apex);
  r.add_detail("pg_cap_with_apex", lhs.get_str());
  r.add_detail("pg_convex_chain", chain.get_str());
  r.add_detail("rhs", rhs.get_str());
  r.witness = Witness{"", -1, lhs.get_str()};
  r.margin = mpq_class(lhs - rhs);
  r.status = lhs == rhs ? ClaimStatus::Holds : ClaimStatus::Violated;
  return r;
}

std::vector<ConstructionRow> construction_report(int n_max, const RunOptions& opts) {
  check_cap(n_max, opts.limits);
  std::vector<ConstructionRow> rows;
  mpz_class prev = count_plane_graphs(Universe(gen_convex_chain(3)), opts);
  for (int m = 4; m <= n_max; ++m) {
    ConstructionRow row;
    row.m = m;
    row.pg_convex = count_plane_graphs(Universe(gen_convex_chain(m)), opts);
    row.fn_approx = flajolet_noy_approx(m);
    row.fn_ratio = row.pg_convex.get_d() / row.fn_approx;
    row.growth = row.pg_convex.get_d() / prev.get_d();
    prev = row.pg_convex;

    const DegreeExpectation d = expected_degree_vector(Universe(gen_cap_with_apex(m)), opts);
    row.pg_cap_apex = d.pg;
    row.vhat0_cap_apex = d.vhat(0);
    const double v0 = row.vhat0_cap_apex.get_d();
    row.trend_2331 = v0 * 23.31 / m;
    row.trend_23314 = v0 * 23.314 / m;
    row.trend_2332 = v0 * 23.32 / m;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace planegraph
