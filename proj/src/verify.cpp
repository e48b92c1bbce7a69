#include "planegraph/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "planegraph/analytic.hpp"
#include "planegraph/charging.hpp"

namespace planegraph {

const char* to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Holds: return "holds";
    case ClaimStatus::Violated: return "violated";
    case ClaimStatus::NotApplicable: return "not-applicable";
  }
  return "?";
}

std::string describe(const Universe& u) {
  std::ostringstream os;
  os << "n=" << u.n() << " hull=" << u.hull_size() << " fp=" << fingerprint(u.points());
  return os.str();
}

namespace {

bool theorem2_hypotheses(const Universe& u) { return u.n() >= 5 && u.hull_size() == 3; }

VerificationReport make_report(const Universe& u, std::string id) {
  VerificationReport r;
  r.claim_id = std::move(id);
  r.descriptor = describe(u);
  return r;
}

Witness expectation_witness(const mpq_class& value) { return {"", -1, to_string(value)}; }

std::string hex(const Universe& u, const EdgeSet& e) { return PlaneGraph{e, u.n()}.to_hex(); }

/// Strict or non-strict comparison of value against bound; margin = bound - value
/// (or value - bound for lower bounds).
void settle(VerificationReport& r, const mpq_class& margin, bool strict) {
  r.margin = margin;
  const bool ok = strict ? margin > 0 : margin >= 0;
  r.status = ok ? ClaimStatus::Holds : ClaimStatus::Violated;
}

DyadicRational charge_of(const Universe& u, const EdgeSet& g) { return graph_charge_v0(u, g); }

}  // namespace

VerificationReport verify_v0_upper(const Universe& u, const DegreeExpectation& d) {
  auto r = make_report(u, "theorem2.v0_upper");
  const mpq_class v0 = d.vhat(0);
  const mpq_class bound = make_rational(11 * u.n(), 112);
  r.add_detail("vhat0", to_string(v0));
  r.add_detail("bound", to_string(bound));
  // 11/112 < 1/10.18  <=>  11 * 1018 < 112 * 100
  r.add_detail("constant_check_11_over_112_lt_1_over_10.18", 11 * 1018 < 112 * 100 ? "true" : "false");
  r.witness = expectation_witness(v0);
  if (!theorem2_hypotheses(u)) {
    r.margin = bound - v0;
    r.add_detail("reason", "requires triangular hull and n >= 5");
    return r;
  }
  settle(r, bound - v0, true);
  return r;
}

std::vector<VerificationReport> verify_vi_upper(const Universe& u, const DegreeExpectation& d, int i_max) {
  if (i_max > u.n() - 1) throw std::invalid_argument("verify_vi_upper: i_max must be <= n - 1");
  std::vector<VerificationReport> out;
  const mpq_class pi_hi = pi_upper_rational();
  const mpq_class n2 = mpq_class(u.n()) * u.n();
  for (int i = 1; i <= i_max; ++i) {
    auto r = make_report(u, "theorem3.vi_upper[i=" + std::to_string(i) + "]");
    const mpq_class v = d.vhat(i);
    r.witness = expectation_witness(v);
    r.add_detail("vhat", to_string(v));
    r.add_detail("bound_approx", std::to_string(u.n() / std::sqrt(M_PI * i)));
    // v < n/sqrt(pi i)  <=  v^2 * pi_hi * i < n^2
    settle(r, n2 - pi_hi * i * v * v, true);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<VerificationReport> verify_previous_lower(const Universe& u, const DegreeExpectation& d) {
  const int n = u.n();
  struct Bound {
    const char* id;
    mpq_class value;
    mpq_class bound;
    bool strict;
  };
  const std::vector<Bound> bounds{
      {"theorem1.v0_lower", d.vhat(0), make_rational(n, 3207), true},
      {"theorem1.v1_lower", d.vhat(1), make_rational(3 * n, 1024), false},
      {"theorem1.v2_lower", d.vhat(2), make_rational(33 * n, 2048), false},
      {"theorem1.v2v3_lower", d.vhat(2) + d.vhat(3), make_rational(n, 24), false},
  };
  std::vector<VerificationReport> out;
  for (const auto& b : bounds) {
    auto r = make_report(u, b.id);
    const mpq_class& bound = b.bound;
    r.add_detail("value", to_string(b.value));
    r.add_detail("bound", to_string(bound));
    r.witness = expectation_witness(b.value);
    settle(r, b.value - bound, b.strict);
    r.finding = r.status == ClaimStatus::Violated;
    out.push_back(std::move(r));
  }
  return out;
}

VerificationReport verify_visibility_lemma(const Universe& u, const EnumerationLimits& limits) {
  check_cap(u.n(), limits);
  auto r = make_report(u, "lemma3.visibility");
  int min_vis = std::numeric_limits<int>::max();
  EdgeSet arg_graph;
  int arg_point = -1;
  unsigned long long zero_vings = 0;
  for_each_plane_graph(u, [&](const EdgeSet& g, const Degrees& d) {
    for (int p = 0; p < u.n(); ++p) {
      if (d[static_cast<std::size_t>(p)] != 0) continue;
      ++zero_vings;
      const int vis = visibility(u, g, p);
      if (vis < min_vis) {
        min_vis = vis;
        arg_graph = g;
        arg_point = p;
      }
    }
  });
  r.add_detail("zero_vings", std::to_string(zero_vings));
  if (arg_point < 0) {
    r.add_detail("reason", "no 0-vings");
    return r;
  }
  r.add_detail("min_visibility", std::to_string(min_vis));
  r.witness = Witness{hex(u, arg_graph), arg_point, std::to_string(min_vis)};
  r.margin = mpq_class(min_vis - 3);
  if (!theorem2_hypotheses(u)) {
    r.add_detail("reason", "report-only: requires triangular hull and n >= 5");
    return r;
  }
  r.status = min_vis >= 3 ? ClaimStatus::Holds : ClaimStatus::Violated;
  return r;
}

std::vector<VerificationReport> verify_triangulation_degree_lemmas(const Universe& u, const EnumerationLimits& limits) {
  const int n = u.n();
  auto v3r = make_report(u, "lemma4.v3_upper");
  auto v4r = make_report(u, "lemma5.v4_upper");
  auto hullr = make_report(u, "lemma4.hull_degree3");
  if (n < 3) return {v3r, v4r, hullr};

  const TriangulationStats stats = enumerate_triangulations(u, {}, limits);
  const mpq_class v3_cap = make_rational(2 * n, 3) - 1;
  std::optional<mpq_class> m3, m4, mh;
  const TriangulationRecord* w3 = nullptr;
  const TriangulationRecord* w4 = nullptr;
  const TriangulationRecord* wh = nullptr;
  for (const auto& t : stats.records) {
    const mpq_class s3 = v3_cap - t.v3;
    const mpq_class s4 = make_rational(6 * n - 9 * t.v3 - 6, 2) - t.v4;
    const mpq_class sh = mpq_class(1 - t.hull_degree3);
    if (!m3 || s3 < *m3) m3 = s3, w3 = &t;
    if (!m4 || s4 < *m4) m4 = s4, w4 = &t;
    if (!mh || sh < *mh) mh = sh, wh = &t;
  }
  for (auto* r : {&v3r, &v4r, &hullr}) r->add_detail("triangulations", stats.count.get_str());
  if (!w3) return {v3r, v4r, hullr};

  v3r.witness = Witness{hex(u, w3->edges), -1, "v3=" + std::to_string(w3->v3)};
  v4r.witness = Witness{hex(u, w4->edges), -1, "v3=" + std::to_string(w4->v3) + ",v4=" + std::to_string(w4->v4)};
  hullr.witness = Witness{hex(u, wh->edges), -1, "hull_degree3=" + std::to_string(wh->hull_degree3)};
  const bool applicable = theorem2_hypotheses(u);
  const std::pair<VerificationReport*, mpq_class> pairs[] = {{&v3r, *m3}, {&v4r, *m4}, {&hullr, *mh}};
  for (const auto& [r, m] : pairs) {
    if (applicable) {
      settle(*r, m, false);
    } else {
      r->margin = m;
      r->add_detail("reason", "report-only: requires triangular hull and n >= 5");
    }
  }
  return {v3r, v4r, hullr};
}

std::vector<VerificationReport> verify_graph_charge_cap(const Universe& u, const EnumerationLimits& limits) {
  check_cap(u.n(), limits);
  const int n = u.n();
  auto cap_r = make_report(u, "charge.graph_cap");
  auto mono_r = make_report(u, "charge.potential_monotone");

  DyadicRational max_charge;
  EdgeSet max_graph;
  bool monotone = true;
  // Smallest slack pt(p,G) - pt(p,T) seen, with its witness.
  int min_slack = std::numeric_limits<int>::max();
  EdgeSet slack_graph;
  int slack_point = -1;
  bool triangulation_dominates = true;

  for_each_plane_graph(u, [&](const EdgeSet& g, const Degrees&) {
    const DyadicRational c = charge_of(u, g);
    if (max_charge < c) {
      max_charge = c;
      max_graph = g;
    }
    const PlaneGraph t = containing_triangulation(u, {g, n});
    const Degrees dt = degrees(u, t.edges);
    for (int p = 0; p < n; ++p) {
      const int slack = potential(u, g, p) - dt[static_cast<std::size_t>(p)];
      if (slack < min_slack) {
        min_slack = slack;
        slack_graph = g;
        slack_point = p;
      }
      monotone = monotone && slack >= 0;
    }
    triangulation_dominates = triangulation_dominates && !(charge_of(u, t.edges) < c);
  });

  const mpq_class cap = n >= 1 ? lp_closed_form(n) : mpq_class(0);
  cap_r.add_detail("max_charge", to_string(max_charge.to_rational()));
  cap_r.add_detail("cap", to_string(cap));
  cap_r.witness = Witness{hex(u, max_graph), -1, max_charge.to_string()};
  mono_r.witness = Witness{hex(u, slack_graph), slack_point, std::to_string(min_slack)};
  mono_r.margin = mpq_class(min_slack == std::numeric_limits<int>::max() ? 0 : min_slack);
  mono_r.add_detail("triangulation_charge_dominates", triangulation_dominates ? "true" : "false");
  mono_r.status = monotone && triangulation_dominates ? ClaimStatus::Holds : ClaimStatus::Violated;

  if (theorem2_hypotheses(u)) {
    settle(cap_r, cap - max_charge.to_rational(), false);
  } else {
    cap_r.margin = cap - max_charge.to_rational();
    cap_r.add_detail("reason", "requires triangular hull and n >= 5");
  }
  return {cap_r, mono_r};
}

std::vector<VerificationReport> verify_zero_ving_recurrence(const Universe& u, const DegreeExpectation& d,
                                                            const RunOptions& opts) {
  const int n = u.n();
  auto all_r = make_report(u, "lemma2.deletion_all");
  auto internal_r = make_report(u, "lemma2.deletion_internal");
  auto cons_r = make_report(u, "lemma2.consequence");

  // Per-point count of graphs in which p is isolated.
  std::vector<unsigned long long> isolated(static_cast<std::size_t>(n), 0);
  for_each_plane_graph(u, [&](const EdgeSet&, const Degrees& deg) {
    for (int p = 0; p < n; ++p)
      if (deg[static_cast<std::size_t>(p)] == 0) ++isolated[static_cast<std::size_t>(p)];
  });

  mpz_class lhs_all = 0, rhs_all = 0, lhs_int = 0, rhs_int = 0;
  std::optional<mpz_class> min_sub;
  bool per_point = true;
  for (int q = 0; q < n; ++q) {
    const mpz_class sub = count_plane_graphs(Universe(u.points().without(q)), opts);
    const mpz_class iso(static_cast<unsigned long>(isolated[static_cast<std::size_t>(q)]));
    per_point = per_point && iso == sub;
    lhs_all += iso;
    rhs_all += sub;
    if (!u.is_hull_point(q)) {
      lhs_int += iso;
      rhs_int += sub;
    }
    if (!min_sub || sub < *min_sub) min_sub = sub;
  }

  all_r.add_detail("sum_v0", d.ving_counts.empty() ? "0" : d.ving_counts[0].get_str());
  all_r.add_detail("sum_pg_deleted", rhs_all.get_str());
  all_r.add_detail("per_point_identity", per_point ? "true" : "false");
  all_r.witness = Witness{"", -1, rhs_all.get_str()};
  const mpz_class v0_total = d.ving_counts.empty() ? mpz_class(0) : d.ving_counts[0];
  all_r.margin = mpq_class(rhs_all - v0_total);
  all_r.status = (v0_total == rhs_all && lhs_all == rhs_all) ? ClaimStatus::Holds : ClaimStatus::Violated;

  internal_r.add_detail("sum_v0_internal", lhs_int.get_str());
  internal_r.add_detail("sum_pg_deleted_internal", rhs_int.get_str());
  internal_r.witness = Witness{"", -1, rhs_int.get_str()};
  internal_r.margin = mpq_class(rhs_int - lhs_int);
  if (u.n() >= 3 && u.hull_size() == 3) {
    internal_r.status = lhs_int == rhs_int ? ClaimStatus::Holds : ClaimStatus::Violated;
  } else {
    internal_r.add_detail("reason", "requires triangular hull");
  }

  // pg(P) >= (n / v0) * min_q pg(P \ q)  <=>  sum_G v0(G) >= n * min_q pg(P \ q)
  if (n >= 1 && v0_total > 0) {
    const mpz_class rhs = *min_sub * n;
    cons_r.add_detail("n_times_min_pg_deleted", rhs.get_str());
    cons_r.witness = Witness{"", -1, v0_total.get_str()};
    settle(cons_r, mpq_class(v0_total - rhs), false);
  }
  return {all_r, internal_r, cons_r};
}

std::vector<VerificationReport> verify_charge_conservation(const Universe& u, const EnumerationLimits& limits) {
  const int n = u.n();
  const ChargeAudit audit = charge_audit(u, false, limits);
  const auto& d = audit.degrees;

  auto v0_r = make_report(u, "charge.conservation_v0");
  const mpq_class total = audit.total_v0_charge.to_rational();
  const mpz_class v0 = n > 0 ? d.ving_counts[0] : mpz_class(0);
  v0_r.add_detail("total_charge", to_string(total));
  v0_r.add_detail("sum_v0", v0.get_str());
  v0_r.witness = Witness{"", -1, to_string(total)};
  v0_r.margin = mpq_class(v0) - total;
  v0_r.status = total == mpq_class(v0) ? ClaimStatus::Holds : ClaimStatus::Violated;

  auto part_r = make_report(u, "charge.family_partition");
  bool partition = true;
  for (int p = 0; p < n; ++p) partition = partition && audit.census.vings_covered(p) == d.pg;
  part_r.add_detail("pg", d.pg.get_str());
  part_r.add_detail("families", std::to_string(audit.census.rows.size()) + " (point, visibility) classes");
  part_r.status = partition ? ClaimStatus::Holds : ClaimStatus::Violated;

  auto deg_r = make_report(u, "charge.conservation_vi");
  bool per_degree = true;
  for (int i = 0; i < n; ++i) {
    const bool eq = audit.census.degree_vings(i) == d.ving_counts[static_cast<std::size_t>(i)];
    if (!eq && per_degree) deg_r.witness = Witness{"", -1, "i=" + std::to_string(i)};
    per_degree = per_degree && eq;
  }
  deg_r.status = per_degree ? ClaimStatus::Holds : ClaimStatus::Violated;

  // Direct check on family members: exactly C(j,i) of the 2^j members have degree i at p.
  auto bin_r = make_report(u, "charge.family_binomial");
  if (n <= 7) {
    bool ok = true;
    bool same_potential = true;
    unsigned long long families = 0;
    for_each_plane_graph(u, [&](const EdgeSet& root, const Degrees& deg) {
      for (int p = 0; p < n && ok; ++p) {
        if (deg[static_cast<std::size_t>(p)] != 0) continue;
        ++families;
        const auto members = family_members(u, root, p);
        const int j = visibility(u, root, p);
        std::vector<unsigned long> by_degree(static_cast<std::size_t>(j) + 1, 0);
        for (const auto& g : members) {
          ++by_degree[static_cast<std::size_t>(degree(u, g, p))];
          same_potential = same_potential && potential(u, g, p) == j && family_root(u, g, p) == root;
        }
        for (int i = 0; i <= j; ++i)
          ok = ok && binomial(static_cast<unsigned long>(j), static_cast<unsigned long>(i)) ==
                         by_degree[static_cast<std::size_t>(i)];
        if (!ok) bin_r.witness = Witness{hex(u, root), p, "j=" + std::to_string(j)};
      }
    });
    bin_r.add_detail("families_checked", std::to_string(families));
    bin_r.add_detail("members_share_potential_and_root", same_potential ? "true" : "false");
    bin_r.status = ok && same_potential ? ClaimStatus::Holds : ClaimStatus::Violated;
  } else {
    bin_r.add_detail("reason", "direct member enumeration limited to n <= 7");
  }
  return {v0_r, part_r, deg_r, bin_r};
}

std::vector<VerificationReport> verify_analytic_facts(long sweep_limit, int stirling_limit, int plateau_limit) {
  std::vector<VerificationReport> out;
  auto make = [](std::string id) {
    VerificationReport r;
    r.claim_id = std::move(id);
    r.descriptor = "analytic";
    return r;
  };

  auto plateau = make("analytic.family_charge_plateau");
  plateau.add_detail("i_max", std::to_string(plateau_limit));
  plateau.status = ClaimStatus::Holds;
  for (int i = 1; i <= plateau_limit; ++i) {
    try {
      (void)max_family_charge(i);
    } catch (const std::logic_error&) {
      plateau.status = ClaimStatus::Violated;
      plateau.witness = Witness{"", -1, "i=" + std::to_string(i)};
      break;
    }
  }
  out.push_back(std::move(plateau));

  const auto add_sweep = [&](std::string id, const SweepResult& s) {
    auto r = make(std::move(id));
    r.add_detail("limit", std::to_string(s.limit));
    if (s.holds()) {
      r.status = ClaimStatus::Holds;
      r.add_detail("min_margin_lower_bound", s.min_margin);
    } else {
      r.status = ClaimStatus::Violated;
      r.witness = Witness{"", -1, "index=" + std::to_string(*s.first_failure)};
    }
    out.push_back(std::move(r));
  };
  add_sweep("analytic.central_binomial", sweep_central_binomial(sweep_limit));
  add_sweep("analytic.harmonic_residual", sweep_harmonic_residual(sweep_limit));
  add_sweep("analytic.harmonic_gap", sweep_harmonic_gap(sweep_limit));
  add_sweep("analytic.stirling", sweep_stirling(stirling_limit));
  return out;
}

const std::vector<std::string>& claim_groups() {
  static const std::vector<std::string> groups{"theorem1", "theorem2",   "theorem3",          "lemma2",
                                               "lemma3",   "lemma4-5",   "charge-cap",        "charge-conservation",
                                               "analytic"};
  return groups;
}

std::vector<VerificationReport> verify_all(const Universe& u, const std::vector<std::string>& groups,
                                           const RunOptions& opts) {
  for (const auto& g : groups)
    if (std::find(claim_groups().begin(), claim_groups().end(), g) == claim_groups().end())
      throw std::invalid_argument("unknown claim group '" + g + "'");
  auto wanted = [&](const std::string& g) {
    return groups.empty() || std::find(groups.begin(), groups.end(), g) != groups.end();
  };
  check_cap(u.n(), opts.limits);

  std::vector<VerificationReport> out;
  auto append = [&](std::vector<VerificationReport> rs) {
    for (auto& r : rs) out.push_back(std::move(r));
  };
  std::optional<DegreeExpectation> d;
  auto degrees_once = [&]() -> const DegreeExpectation& {
    if (!d) d = expected_degree_vector(u, opts);
    return *d;
  };

  if (wanted("theorem1")) append(verify_previous_lower(u, degrees_once()));
  if (wanted("theorem2")) out.push_back(verify_v0_upper(u, degrees_once()));
  if (wanted("theorem3") && u.n() >= 2) append(verify_vi_upper(u, degrees_once(), u.n() - 1));
  if (wanted("lemma2")) append(verify_zero_ving_recurrence(u, degrees_once(), opts));
  if (wanted("lemma3")) out.push_back(verify_visibility_lemma(u, opts.limits));
  if (wanted("lemma4-5")) append(verify_triangulation_degree_lemmas(u, opts.limits));
  if (wanted("charge-cap")) append(verify_graph_charge_cap(u, opts.limits));
  if (wanted("charge-conservation")) append(verify_charge_conservation(u, opts.limits));
  if (wanted("analytic")) append(verify_analytic_facts());
  return out;
}

bool replay_witness(const Universe& u, const VerificationReport& report) {
  if (!report.witness) return false;
  const Witness& w = *report.witness;
  const std::string& id = report.claim_id;
  auto graph = [&] { return EdgeSet::from_hex(w.graph_hex); };

  if (id == "lemma3.visibility") {
    const EdgeSet g = graph();
    return is_plane(u, g) && degree(u, g, w.point) == 0 && std::to_string(visibility(u, g, w.point)) == w.observed;
  }
  if (id == "charge.graph_cap") return graph_charge_v0(u, graph()).to_string() == w.observed;
  if (id == "charge.potential_monotone") {
    const EdgeSet g = graph();
    const PlaneGraph t = containing_triangulation(u, {g, u.n()});
    return std::to_string(potential(u, g, w.point) - degree(u, t.edges, w.point)) == w.observed;
  }
  if (id.rfind("lemma4.", 0) == 0 || id.rfind("lemma5.", 0) == 0) {
    const EdgeSet t = graph();
    if (!is_plane(u, t) || !is_triangulation(u, t)) return false;
    const Degrees d = degrees(u, t);
    int v3 = 0, v4 = 0, hull3 = 0;
    for (int p = 0; p < u.n(); ++p) {
      v3 += d[static_cast<std::size_t>(p)] == 3;
      v4 += d[static_cast<std::size_t>(p)] == 4;
      hull3 += d[static_cast<std::size_t>(p)] == 3 && u.is_hull_point(p);
    }
    if (id == "lemma4.v3_upper") return w.observed == "v3=" + std::to_string(v3);
    if (id == "lemma5.v4_upper") return w.observed == "v3=" + std::to_string(v3) + ",v4=" + std::to_string(v4);
    return w.observed == "hull_degree3=" + std::to_string(hull3);
  }

  const DegreeExpectation d = expected_degree_vector(u);
  if (id == "theorem2.v0_upper" || id == "theorem1.v0_lower") return to_string(d.vhat(0)) == w.observed;
  if (id == "theorem1.v1_lower") return to_string(d.vhat(1)) == w.observed;
  if (id == "theorem1.v2_lower") return to_string(d.vhat(2)) == w.observed;
  if (id == "theorem1.v2v3_lower") return to_string(d.vhat(2) + d.vhat(3)) == w.observed;
  if (id == "lemma2.consequence") return d.ving_counts[0].get_str() == w.observed;
  if (id == "lemma2.deletion_all" || id == "lemma2.deletion_internal") {
    mpz_class sum = 0;
    for (int q = 0; q < u.n(); ++q)
      if (id == "lemma2.deletion_all" || !u.is_hull_point(q)) sum += count_plane_graphs(Universe(u.points().without(q)));
    return sum.get_str() == w.observed;
  }
  if (id.rfind("charge.", 0) == 0) {
    const ChargeAudit audit = charge_audit(u, false);
    if (id == "charge.conservation_v0") return to_string(audit.total_v0_charge.to_rational()) == w.observed;
    if (id == "charge.conservation_vi" && w.observed.rfind("i=", 0) == 0) {
      const int i = std::stoi(w.observed.substr(2));
      return audit.census.degree_vings(i) != d.ving_counts[static_cast<std::size_t>(i)];
    }
    if (id == "charge.family_binomial" && w.observed.rfind("j=", 0) == 0) {
      const EdgeSet root = graph();
      const int j = visibility(u, root, w.point);
      if (w.observed != "j=" + std::to_string(j)) return false;
      std::vector<unsigned long> by_degree(static_cast<std::size_t>(j) + 1, 0);
      for (const auto& g : family_members(u, root, w.point)) ++by_degree[static_cast<std::size_t>(degree(u, g, w.point))];
      for (int i = 0; i <= j; ++i)
        if (binomial(static_cast<unsigned long>(j), static_cast<unsigned long>(i)) != by_degree[static_cast<std::size_t>(i)])
          return true;
      return false;
    }
    return false;
  }
  if (id.rfind("theorem3.vi_upper[i=", 0) == 0) {
    const int i = std::stoi(id.substr(std::string("theorem3.vi_upper[i=").size()));
    return to_string(d.vhat(i)) == w.observed;
  }
  return false;
}

bool any_violation(const std::vector<VerificationReport>& reports) {
  return std::any_of(reports.begin(), reports.end(),
                     [](const VerificationReport& r) { return r.status == ClaimStatus::Violated && !r.finding; });
}

}  // namespace planegraph
