#include "planegraph/charging.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace planegraph {

int visibility(const Universe& u, const EdgeSet& g, int p) { return u.visible_segments(g, p).count(); }

int potential(const Universe& u, const EdgeSet& g, int p) { return degree(u, g, p) + visibility(u, g, p); }

EdgeSet family_root(const Universe& u, const EdgeSet& g, int p) { return g & ~u.segments().incident(p); }

std::vector<EdgeSet> family_members(const Universe& u, const EdgeSet& root, int p) {
  if (root.intersects(u.segments().incident(p))) {
    throw std::invalid_argument("family_members: point " + std::to_string(p) + " is not isolated in the root");
  }
  std::vector<int> visible;
  u.visible_segments(root, p).for_each([&](int k) { visible.push_back(k); });
  const std::size_t j = visible.size();
  std::vector<EdgeSet> members;
  members.reserve(std::size_t{1} << j);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << j); ++mask) {
    EdgeSet g = root;
    for (std::size_t t = 0; t < j; ++t)
      if ((mask >> t) & 1U) g.set(visible[t]);
    if (!is_plane(u, g)) throw std::logic_error("family member is not crossing-free");
    members.push_back(g);
  }
  return members;
}

mpq_class family_charge_profile(int i, int j) {
  if (i < 0 || j < 0 || i > j) return 0;
  mpz_class den = 1;
  den <<= static_cast<unsigned long>(j);
  return make_rational(binomial(static_cast<unsigned long>(j), static_cast<unsigned long>(i)), den);
}

FamilyChargeMaximum max_family_charge(int i) {
  if (i < 1) throw std::domain_error("max_family_charge: i must be >= 1");
  FamilyChargeMaximum out;
  out.searched_to = 8 * i;
  for (int j = i; j <= out.searched_to; ++j) {
    const mpq_class f = family_charge_profile(i, j);
    if (out.argmax.empty() || f > out.value) {
      out.value = f;
      out.argmax = {j};
    } else if (f == out.value) {
      out.argmax.push_back(j);
    }
  }

  // f(j+1)/f(j) = (j+1) / (2(j+1-i)), which is < 1 exactly when j > 2i-1.
  bool tail = true;
  for (int j = 2 * i; j < out.searched_to && tail; ++j) {
    const mpq_class ratio = family_charge_profile(i, j + 1) / family_charge_profile(i, j);
    const mpq_class predicted = make_rational(j + 1, 2 * (j + 1 - i));
    tail = ratio == predicted && predicted < 1;
  }
  out.tail_certified = tail && (2 * i + 1 < 2 * (2 * i + 1 - i));

  mpz_class four_pow = 1;
  four_pow <<= 2UL * static_cast<unsigned long>(i);
  const mpq_class expected =
      make_rational(binomial(2UL * static_cast<unsigned long>(i), static_cast<unsigned long>(i)), four_pow);
  if (out.argmax != std::vector<int>{2 * i - 1, 2 * i} || out.value != expected || !out.tail_certified) {
    throw std::logic_error("max_family_charge: plateau {2i-1, 2i} not confirmed for i=" + std::to_string(i));
  }
  return out;
}

DyadicRational graph_charge_v0(const Universe& u, const EdgeSet& g) {
  const int n = u.n();
  if (n == 0) return {};
  const unsigned long top = static_cast<unsigned long>(n - 1);
  mpz_class num = 0;
  for (int p = 0; p < n; ++p) num += mpz_class(1) << (top - static_cast<unsigned long>(potential(u, g, p)));
  return {num, top};
}

mpq_class lp_closed_form(int n) {
  return make_rational(11 * n - 6, 112);
}

LpOptimum lp_charge_cap(int n) {
  if (n < 5) throw std::domain_error("lp_charge_cap: requires n >= 5");
  const mpq_class nq = n;
  // Constraint a*v3 + b*v4 <= c, stored as (a, b, c).
  struct Halfplane {
    mpq_class a, b, c;
  };
  const std::array<Halfplane, 5> cons{{
      {1, 0, make_rational(2 * n, 3) - 1},   // v3 <= 2n/3 - 1
      {9, 2, 6 * nq - 6},                // v4 <= (6n - 9 v3 - 6)/2
      {1, 1, nq},                        // v3 + v4 <= n
      {-1, 0, 0},                        // v3 >= 0
      {0, -1, 0},                        // v4 >= 0
  }};
  auto objective = [&](const mpq_class& v3, const mpq_class& v4) -> mpq_class {
    return v3 / 8 + v4 / 16 + (nq - v3 - v4) / 32;
  };

  bool found = false;
  LpOptimum best;
  for (std::size_t s = 0; s < cons.size(); ++s)
    for (std::size_t t = s + 1; t < cons.size(); ++t) {
      const auto& p = cons[s];
      const auto& q = cons[t];
      const mpq_class det = p.a * q.b - p.b * q.a;
      if (det == 0) continue;
      const mpq_class v3 = (p.c * q.b - p.b * q.c) / det;
      const mpq_class v4 = (p.a * q.c - p.c * q.a) / det;
      const bool feasible = std::all_of(cons.begin(), cons.end(),
                                        [&](const Halfplane& h) { return h.a * v3 + h.b * v4 <= h.c; });
      if (!feasible) continue;
      const mpq_class val = objective(v3, v4);
      if (!found || val > best.value) best = {val, v3, v4};
      found = true;
    }
  if (!found) throw std::domain_error("lp_charge_cap: infeasible for n=" + std::to_string(n));

  const mpq_class v3_expected = make_rational(4 * n - 6, 7);
  const mpq_class v4_expected = make_rational(3 * n + 6, 7);
  if (best.value != lp_closed_form(n) || best.v3 != v3_expected || best.v4 != v4_expected) {
    throw std::logic_error("lp_charge_cap: optimum differs from (11n-6)/112 at n=" + std::to_string(n));
  }
  return best;
}

mpz_class FamilyCensus::vings_covered(int p) const {
  mpz_class total = 0;
  for (const auto& r : rows)
    if (r.point == p) total += r.multiplicity << static_cast<unsigned long>(r.visibility);
  return total;
}

mpz_class FamilyCensus::degree_vings(int i) const {
  mpz_class total = 0;
  for (const auto& r : rows)
    if (r.visibility >= i)
      total += r.multiplicity * binomial(static_cast<unsigned long>(r.visibility), static_cast<unsigned long>(i));
  return total;
}

namespace {

using CensusTable = std::array<std::array<unsigned __int128, kMaxSupportedPoints>, kMaxSupportedPoints>;

FamilyCensus census_from_table(int n, const CensusTable& table) {
  FamilyCensus census;
  census.n = n;
  for (int p = 0; p < n; ++p)
    for (int j = 0; j < n; ++j) {
      const auto m = table[static_cast<std::size_t>(p)][static_cast<std::size_t>(j)];
      if (m != 0) census.rows.push_back({p, j, to_mpz(m)});
    }
  return census;
}

}  // namespace

FamilyCensus family_census(const Universe& u, const EnumerationLimits& limits) {
  check_cap(u.n(), limits);
  CensusTable table{};
  for_each_plane_graph(u, [&](const EdgeSet& g, const Degrees& d) {
    for (int p = 0; p < u.n(); ++p)
      if (d[static_cast<std::size_t>(p)] == 0) ++table[static_cast<std::size_t>(p)][static_cast<std::size_t>(visibility(u, g, p))];
  });
  return census_from_table(u.n(), table);
}

ChargeAudit charge_audit(const Universe& u, bool keep_per_graph, const EnumerationLimits& limits) {
  check_cap(u.n(), limits);
  const int n = u.n();
  CensusTable table{};
  unsigned __int128 pg = 0;
  unsigned __int128 edges = 0;
  std::array<unsigned __int128, kMaxSupportedPoints> ving{};
  // Charges share the denominator 2^(n-1): potential never exceeds n-1.
  unsigned __int128 charge_numerator = 0;
  const int top = std::max(n - 1, 0);

  ChargeAudit audit;
  for_each_plane_graph(u, [&](const EdgeSet& g, const Degrees& d) {
    ++pg;
    edges += static_cast<unsigned>(g.count());
    std::uint64_t graph_numerator = 0;
    for (int p = 0; p < n; ++p) {
      const int dp = d[static_cast<std::size_t>(p)];
      ++ving[static_cast<std::size_t>(dp)];
      const int vis = visibility(u, g, p);
      if (dp == 0) ++table[static_cast<std::size_t>(p)][static_cast<std::size_t>(vis)];
      graph_numerator += std::uint64_t{1} << (top - (dp + vis));
    }
    charge_numerator += graph_numerator;
    if (keep_per_graph) audit.per_graph.emplace_back(g, DyadicRational(to_mpz(graph_numerator), static_cast<unsigned long>(top)));
  });

  audit.degrees.pg = to_mpz(pg);
  audit.degrees.total_edges = to_mpz(edges);
  for (int i = 0; i < n; ++i) audit.degrees.ving_counts.push_back(to_mpz(ving[static_cast<std::size_t>(i)]));
  audit.census = census_from_table(n, table);
  audit.total_v0_charge = DyadicRational(to_mpz(charge_numerator), static_cast<unsigned long>(top));
  return audit;
}

}  // namespace planegraph
