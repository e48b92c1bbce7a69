#pragma once

#include <compare>
#include <string>

#include <gmpxx.h>

namespace planegraph {

/// numerator / 2^exponent, kept normalized (odd numerator or exponent 0).
class DyadicRational {
 public:
  DyadicRational() = default;
  DyadicRational(mpz_class numerator, unsigned long exponent);

  /// 2^-k.
  static DyadicRational inverse_power_of_two(unsigned long k) { return {1, k}; }

  const mpz_class& numerator() const { return num_; }
  unsigned long exponent() const { return exp_; }
  mpq_class to_rational() const;

  DyadicRational& operator+=(const DyadicRational& o);
  friend DyadicRational operator+(DyadicRational a, const DyadicRational& b) { return a += b; }
  friend bool operator==(const DyadicRational& a, const DyadicRational& b) {
    return a.exp_ == b.exp_ && a.num_ == b.num_;
  }
  friend std::strong_ordering operator<=>(const DyadicRational& a, const DyadicRational& b);

  /// "num/2^exp" in decimal.
  std::string to_string() const;

 private:
  void normalize();

  mpz_class num_ = 0;
  unsigned long exp_ = 0;
};

mpz_class binomial(unsigned long n, unsigned long k);

/// num/den in lowest terms; den must be non-zero.
mpq_class make_rational(const mpz_class& num, const mpz_class& den);

/// Decimal string of a rational, reduced ("3/4", "5").
std::string to_string(const mpq_class& q);

}  // namespace planegraph
