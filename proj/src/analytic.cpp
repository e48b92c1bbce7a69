#include "planegraph/analytic.hpp"

#include <stdexcept>

#include "planegraph/dyadic.hpp"

namespace planegraph {

namespace {

bool certified_margin(const Interval& margin, const Interval& enclosure_width) {
  return margin.certainly_positive() && (enclosure_width * Interval(kCertificationFactor)).certainly_less(margin);
}

mpz_class factorial(unsigned long m) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), m);
  return f;
}

Interval inverse(long k) { return Interval(make_rational(1, k)); }

}  // namespace

mpq_class pi_upper_rational() {
  mpz_class den = 1;
  for (int t = 0; t < 15; ++t) den *= 10;
  return make_rational(mpz_class("3141592653589794"), den);
}

HarmonicResidual harmonic_residual(long m) {
  if (m < 1) throw std::domain_error("harmonic_residual: m must be >= 1");
  Interval h(0L);
  for (long k = 1; k <= m; ++k) h = h + inverse(k);

  HarmonicResidual r;
  r.m = m;
  r.eps = log(Interval(m)) + Interval::euler_gamma() + Interval(make_rational(1, 2 * m)) - h;
  const mpq_class cap = make_rational(1, 8 * m * m);
  r.lower_margin = r.eps;
  r.upper_margin = Interval(cap) - r.eps;
  const Interval w = r.eps.width();
  r.certified = certified_margin(r.lower_margin, w) && certified_margin(r.upper_margin, w);
  return r;
}

StirlingCheck stirling_bounds(int m) {
  if (m < 1 || m > 500) throw std::domain_error("stirling_bounds: 1 <= m <= 500");
  // 500! has ~3700 bits; keep the factorial exact in the enclosure.
  constexpr mpfr_prec_t prec = 4096;
  const Interval mi(static_cast<long>(m), prec);
  const Interval two_pi_m = Interval(2L, prec) * Interval::pi(prec) * mi;
  // ln(sqrt(2 pi m) (m/e)^m)
  const Interval base = log(two_pi_m) / Interval(2L, prec) + mi * log(mi) - mi;
  const Interval lo_corr(make_rational(1, 12 * m + 1), prec);
  const Interval hi_corr(make_rational(1, 12 * m), prec);

  StirlingCheck c;
  c.m = m;
  c.factorial = Interval::from_mpz(factorial(static_cast<unsigned long>(m)), prec);
  c.lower_bound = exp(base + lo_corr);
  c.upper_bound = exp(base + hi_corr);
  const Interval ln_fact = log(c.factorial);
  c.lower_margin = ln_fact - (base + lo_corr);
  c.upper_margin = (base + hi_corr) - ln_fact;
  c.certified = certified_margin(c.lower_margin, c.lower_margin.width()) &&
                certified_margin(c.upper_margin, c.upper_margin.width());
  return c;
}

bool central_binomial_below_inverse_sqrt_pi(long i) {
  if (i < 1) throw std::domain_error("central binomial check: i must be >= 1");
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), 2UL * static_cast<unsigned long>(i), static_cast<unsigned long>(i));
  const mpq_class pi_hi = pi_upper_rational();
  const mpz_class lhs = c * c * i * pi_hi.get_num();
  const mpz_class rhs = (mpz_class(1) << (4UL * static_cast<unsigned long>(i))) * pi_hi.get_den();
  return lhs < rhs;
}

SweepResult sweep_central_binomial(long i_max) {
  SweepResult out;
  out.limit = i_max;
  const mpq_class pi_hi = pi_upper_rational();
  mpz_class c = 1;  // C(2i, i)
  mpq_class min_margin;
  for (long i = 1; i <= i_max; ++i) {
    c = c * (2 * i - 1) * (2 * i) / (i * i);
    const mpz_class lhs = c * c * i * pi_hi.get_num();
    const mpz_class rhs = (mpz_class(1) << (4UL * static_cast<unsigned long>(i))) * pi_hi.get_den();
    if (!(lhs < rhs)) {
      out.first_failure = i;
      return out;
    }
    // Relative margin 1 - lhs/rhs.
    const mpq_class margin = 1 - make_rational(lhs, rhs);
    if (i == 1 || margin < min_margin) min_margin = margin;
  }
  out.min_margin = Interval(min_margin).lower_string(12);
  return out;
}

SweepResult sweep_harmonic_residual(long m_max) {
  SweepResult out;
  out.limit = m_max;
  const Interval gamma = Interval::euler_gamma();
  Interval h(0L);
  Interval min_margin(1L);
  for (long m = 1; m <= m_max; ++m) {
    h = h + inverse(m);
    const Interval eps = log(Interval(m)) + gamma + Interval(make_rational(1, 2 * m)) - h;
    const Interval upper = Interval(make_rational(1, 8 * m * m)) - eps;
    const Interval w = eps.width();
    if (!certified_margin(eps, w) || !certified_margin(upper, w)) {
      out.first_failure = m;
      return out;
    }
    for (const Interval* mg : {&eps, &upper})
      if (mpfr_less_p(mg->lo(), min_margin.lo())) min_margin = *mg;
  }
  out.min_margin = min_margin.lower_string(12);
  return out;
}

SweepResult sweep_harmonic_gap(long i_max) {
  SweepResult out;
  out.limit = i_max;
  const Interval ln2 = Interval::ln2();
  Interval gap(make_rational(1, 2));  // H_2 - H_1
  Interval min_margin(1L);
  for (long i = 1; i <= i_max; ++i) {
    if (i > 1) gap = gap + inverse(2 * i - 1) + inverse(2 * i) - inverse(i);
    const Interval margin = ln2 - gap;
    if (!certified_margin(margin, gap.width() + ln2.width())) {
      out.first_failure = i;
      return out;
    }
    if (mpfr_less_p(margin.lo(), min_margin.lo())) min_margin = margin;
  }
  out.min_margin = min_margin.lower_string(12);
  return out;
}

SweepResult sweep_stirling(int m_max) {
  SweepResult out;
  out.limit = m_max;
  Interval min_margin(1L);
  for (int m = 1; m <= m_max; ++m) {
    const StirlingCheck c = stirling_bounds(m);
    if (!c.certified) {
      out.first_failure = m;
      return out;
    }
    for (const Interval* mg : {&c.lower_margin, &c.upper_margin})
      if (mpfr_less_p(mg->lo(), min_margin.lo())) min_margin = *mg;
  }
  out.min_margin = min_margin.lower_string(12);
  return out;
}

}  // namespace planegraph
