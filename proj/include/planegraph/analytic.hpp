#pragma once

#include <optional>
#include <string>

#include <gmpxx.h>

#include "planegraph/interval.hpp"

namespace planegraph {

/// Rational upper bound on pi: 3141592653589794 / 10^15.
mpq_class pi_upper_rational();

/// Margins must exceed the enclosure width by this factor to count as certified.
inline constexpr long kCertificationFactor = 1000;

/// eps_m = ln m + gamma + 1/(2m) - H_m, enclosed; bounds checked: 0 <= eps_m <= 1/(8m^2).
struct HarmonicResidual {
  long m = 0;
  Interval eps;
  Interval lower_margin;  // eps - 0
  Interval upper_margin;  // 1/(8m^2) - eps
  bool certified = false;
};

HarmonicResidual harmonic_residual(long m);

/// Robbins' two-sided Stirling bound at m, compared in log space:
/// ln(sqrt(2 pi m)(m/e)^m) + 1/(12m+1) < ln m! < same + 1/(12m).
struct StirlingCheck {
  int m = 0;
  Interval lower_bound;  // sqrt(2 pi m)(m/e)^m e^{1/(12m+1)}
  Interval factorial;
  Interval upper_bound;  // sqrt(2 pi m)(m/e)^m e^{1/(12m)}
  Interval lower_margin;  // ln m! - ln(lower)
  Interval upper_margin;  // ln(upper) - ln m!
  bool certified = false;
};

StirlingCheck stirling_bounds(int m);

/// C(2i,i)/4^i < 1/sqrt(pi i), certified by C(2i,i)^2 * i * pi_hi < 16^i exactly.
bool central_binomial_below_inverse_sqrt_pi(long i);

/// Outcome of a sweep over 1..limit: first index that failed, if any.
struct SweepResult {
  long limit = 0;
  std::optional<long> first_failure;
  /// Smallest certified margin seen, as a decimal string (lower bound).
  std::string min_margin;
  bool holds() const { return !first_failure; }
};

SweepResult sweep_central_binomial(long i_max);
SweepResult sweep_harmonic_residual(long m_max);
/// H_{2i} - H_i < ln 2 for i = 1..i_max.
SweepResult sweep_harmonic_gap(long i_max);
SweepResult sweep_stirling(int m_max);

}  // namespace planegraph
