#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "planegraph/crossing.hpp"
#include "planegraph/enumerate.hpp"

namespace planegraph {

enum class ClaimStatus { Holds, Violated, NotApplicable };

const char* to_string(ClaimStatus s);

/// Identifies what a witness points at: a graph (hex edge set) and optionally a point.
struct Witness {
  std::string graph_hex;
  int point = -1;
  /// The quantity the claim constrains, evaluated on the witness.
  std::string observed;
};

struct VerificationReport {
  std::string claim_id;
  std::string descriptor;
  ClaimStatus status = ClaimStatus::NotApplicable;
  /// Present on every "violated" report; verifiers that scan graphs also
  /// keep the extremal graph when the claim holds.
  std::optional<Witness> witness;
  /// Exact slack of the inequality (bound minus value), when rational.
  std::optional<mpq_class> margin;
  /// Violations of bounds cited from earlier work are findings about small
  /// n, not failures of this code.
  bool finding = false;
  std::vector<std::pair<std::string, std::string>> details;

  void add_detail(std::string key, std::string value) { details.emplace_back(std::move(key), std::move(value)); }
};

/// "n=<n> hull=<h> fp=<fingerprint>".
std::string describe(const Universe& u);

/// v0 < 11n/112; applies to triangular hulls with n >= 5.
VerificationReport verify_v0_upper(const Universe& u, const DegreeExpectation& d);
/// v_i < n / sqrt(pi i) for 1 <= i <= i_max.
std::vector<VerificationReport> verify_vi_upper(const Universe& u, const DegreeExpectation& d, int i_max);
/// The four lower bounds quoted from earlier work.
std::vector<VerificationReport> verify_previous_lower(const Universe& u, const DegreeExpectation& d);
/// Every isolated vertex of every plane graph sees at least 3 vertices.
VerificationReport verify_visibility_lemma(const Universe& u, const EnumerationLimits& limits = {});
/// v3(T) <= 2n/3 - 1, v4(T) <= (6n - 9 v3(T) - 6)/2, and at most one hull vertex of degree 3.
std::vector<VerificationReport> verify_triangulation_degree_lemmas(const Universe& u,
                                                                   const EnumerationLimits& limits = {});
/// graph_charge_v0(G) <= (11n-6)/112 for every G, plus pt(p,G) >= pt(p,T)
/// for the containing triangulation T.
std::vector<VerificationReport> verify_graph_charge_cap(const Universe& u, const EnumerationLimits& limits = {});
/// Deletion identities: sum_G v0(G) = sum_q pg(P\q), and the internal-point variant.
std::vector<VerificationReport> verify_zero_ving_recurrence(const Universe& u, const DegreeExpectation& d,
                                                            const RunOptions& opts = {});
/// Both charging schemes conserve total charge; families partition the vings.
std::vector<VerificationReport> verify_charge_conservation(const Universe& u, const EnumerationLimits& limits = {});
/// The standalone analytic facts (plateau, central binomial, harmonic, Stirling).
std::vector<VerificationReport> verify_analytic_facts(long sweep_limit = 10000, int stirling_limit = 500,
                                                      int plateau_limit = 64);

/// Claim groups accepted by `verify --claims`.
const std::vector<std::string>& claim_groups();

/// Runs the selected claim groups (all when empty) and returns reports in
/// the fixed group order.
std::vector<VerificationReport> verify_all(const Universe& u, const std::vector<std::string>& groups,
                                           const RunOptions& opts = {});

/// Re-evaluates a witness; true iff it still exhibits the recorded observation.
bool replay_witness(const Universe& u, const VerificationReport& report);

/// True iff some applicable claim is violated (findings excluded).
bool any_violation(const std::vector<VerificationReport>& reports);

}  // namespace planegraph
