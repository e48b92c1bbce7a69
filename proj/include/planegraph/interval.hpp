#pragma once

#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace planegraph {

/// Closed interval [lo, hi] of MPFR floats with outward rounding on every
/// operation, so the true value is always enclosed.
class Interval {
 public:
  static constexpr mpfr_prec_t kDefaultPrecision = 256;

  /// [0, 0] at the given precision.
  struct Precision {
    mpfr_prec_t bits = kDefaultPrecision;
  };
  Interval() : Interval(Precision{}) {}
  explicit Interval(Precision prec);
  Interval(const mpq_class& q, mpfr_prec_t prec = kDefaultPrecision);  // NOLINT: implicit by intent
  Interval(long v, mpfr_prec_t prec = kDefaultPrecision);              // NOLINT
  Interval(const Interval& o);
  Interval(Interval&& o) noexcept;
  Interval& operator=(Interval o) noexcept;
  ~Interval();

  /// Decimal literal widened by +-ulp_decimal (e.g. a constant quoted to 50 digits).
  static Interval from_decimal(const std::string& digits, const std::string& radius,
                               mpfr_prec_t prec = kDefaultPrecision);
  static Interval from_mpz(const mpz_class& z, mpfr_prec_t prec = kDefaultPrecision);
  static Interval pi(mpfr_prec_t prec = kDefaultPrecision);
  static Interval ln2(mpfr_prec_t prec = kDefaultPrecision);
  /// Euler-Mascheroni constant from a 50-digit literal, radius 1e-50.
  static Interval euler_gamma(mpfr_prec_t prec = kDefaultPrecision);

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  /// Requires b strictly positive or strictly negative.
  friend Interval operator/(const Interval& a, const Interval& b);

  friend Interval log(const Interval& a);   // a > 0
  friend Interval exp(const Interval& a);
  friend Interval sqrt(const Interval& a);  // a >= 0

  /// lo > 0, hi < o.lo, etc.
  bool certainly_positive() const;
  bool certainly_nonnegative() const;
  bool certainly_less(const Interval& o) const;

  /// hi - lo rounded up.
  Interval width() const;
  double lower_double() const;
  double upper_double() const;
  double mid_double() const;
  /// Lower bound as a decimal string with `digits` significant digits.
  std::string lower_string(int digits = 20) const;
  std::string upper_string(int digits = 20) const;

  mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }
  const __mpfr_struct* lo() const { return lo_; }
  const __mpfr_struct* hi() const { return hi_; }

 private:
  mpfr_t lo_;
  mpfr_t hi_;
};

}  // namespace planegraph
