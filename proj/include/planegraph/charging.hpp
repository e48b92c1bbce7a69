#pragma once

#include <map>
#include <vector>

#include <gmpxx.h>

#include "planegraph/crossing.hpp"
#include "planegraph/dyadic.hpp"
#include "planegraph/enumerate.hpp"

namespace planegraph {

// Vertex-in-graph quantities. A "ving" is a pair (point, plane graph).

/// Vertices q != p with pq absent from G and crossing no edge of G.
int visibility(const Universe& u, const EdgeSet& g, int p);
/// deg_G(p) + visibility(G, p); invariant under toggling edges at p.
int potential(const Universe& u, const EdgeSet& g, int p);

/// G with every edge at p removed, so (p, root) is a 0-ving.
EdgeSet family_root(const Universe& u, const EdgeSet& g, int p);

/// All 2^j graphs obtained from `root` by joining p to any subset of its j
/// visible vertices. Throws std::invalid_argument if p is not isolated in root.
std::vector<EdgeSet> family_members(const Universe& u, const EdgeSet& root, int p);

/// Per-ving share of the degree-i charge in a j-family: C(j,i)/2^j (0 if i > j).
mpq_class family_charge_profile(int i, int j);

struct FamilyChargeMaximum {
  std::vector<int> argmax;
  mpq_class value;
  /// j_searched_to: the exhaustive search range upper end (8i).
  int searched_to = 0;
  /// Ratio test certifies strict decrease for every j >= 2i.
  bool tail_certified = false;
};

/// Maximizes C(j,i)/2^j over j >= i. Throws std::logic_error if the
/// maximizers differ from {2i-1, 2i} or the value from C(2i,i)/4^i.
FamilyChargeMaximum max_family_charge(int i);

/// sum_p 2^-potential(p, G): charge a graph holds under the isolated-vertex scheme.
DyadicRational graph_charge_v0(const Universe& u, const EdgeSet& g);

struct LpOptimum {
  mpq_class value;
  mpq_class v3;
  mpq_class v4;
};

/// max v3/8 + v4/16 + (n - v3 - v4)/32 subject to the triangulation degree
/// constraints, by exact vertex enumeration. Throws std::domain_error for n < 5.
LpOptimum lp_charge_cap(int n);

/// (11n - 6)/112.
mpq_class lp_closed_form(int n);

struct FamilyCensusRow {
  int point = 0;
  int visibility = 0;
  mpz_class multiplicity;
};

/// Number of families (0-vings) per (point, visibility).
struct FamilyCensus {
  int n = 0;
  std::vector<FamilyCensusRow> rows;  // sorted by (point, visibility)
  /// sum over rows of multiplicity * 2^visibility for point p.
  mpz_class vings_covered(int p) const;
  /// sum over families of C(j, i): the degree-i vings the families contain.
  mpz_class degree_vings(int i) const;
};

FamilyCensus family_census(const Universe& u, const EnumerationLimits& limits = {});

struct ChargeAudit {
  DegreeExpectation degrees;
  FamilyCensus census;
  /// sum over G of graph_charge_v0(G).
  DyadicRational total_v0_charge;
  /// Per-graph charges, in enumeration order (only filled when requested).
  std::vector<std::pair<EdgeSet, DyadicRational>> per_graph;
};

ChargeAudit charge_audit(const Universe& u, bool keep_per_graph, const EnumerationLimits& limits = {});

}  // namespace planegraph
