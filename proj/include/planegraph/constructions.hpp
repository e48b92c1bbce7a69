#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "planegraph/enumerate.hpp"
#include "planegraph/geometry.hpp"
#include "planegraph/verify.hpp"

namespace planegraph {

enum class ConstructionKind { ConvexChain, CapWithApex, TriangularHullRandom };

ConstructionKind parse_construction_kind(const std::string& name);
const char* to_string(ConstructionKind k);

struct ConstructionSpec {
  ConstructionKind kind = ConstructionKind::ConvexChain;
  int n = 3;
  std::uint64_t seed = 0;
};

/// m points (k, -k^2), k = 1..m: a downward parabolic cap in convex position.
PointSet gen_convex_chain(int m);

/// Cap (k, -k^2), k = 1..n-1 (labels 0..n-2) plus the apex (0, H) (label n-1).
/// H starts at 4(n-1)^2 and doubles until no apex segment crosses any cap
/// chord, checked exhaustively.
PointSet gen_cap_with_apex(int n);

/// True iff no segment from the apex (last label) crosses a chord between
/// two other points.
bool apex_certificate(const PointSet& points);

/// Triangle (0,0), (1000,0), (0,1000) plus n-3 interior lattice points,
/// rejection-sampled into general position; deterministic in seed.
PointSet gen_triangular_hull_random(int n, std::uint64_t seed);

PointSet generate(const ConstructionSpec& spec);

/// Leading term of the convex-position plane graph count:
/// c (6 + 4 sqrt 2)^m / (sqrt(pi) m^{3/2}), c = sqrt(99 sqrt 2 - 140) / 4.
double flajolet_noy_approx(int m);

/// count(cap_with_apex(n)) == 2^{n-1} count(convex_chain(n-1)).
VerificationReport verify_product_law(int n, const RunOptions& opts = {});

struct ConstructionRow {
  int m = 0;
  mpz_class pg_convex;
  double fn_approx = 0;
  double fn_ratio = 0;
  /// pg_convex(m) / pg_convex(m-1).
  double growth = 0;
  mpz_class pg_cap_apex;
  mpq_class vhat0_cap_apex;
  /// vhat0 * c / n for c in {23.31, 23.314, 23.32}.
  double trend_2331 = 0, trend_23314 = 0, trend_2332 = 0;
};

/// Rows for m = 4..n_max (cap-with-apex needs n >= 4).
std::vector<ConstructionRow> construction_report(int n_max, const RunOptions& opts = {});

}  // namespace planegraph
