#include "planegraph/dyadic.hpp"

namespace planegraph {

DyadicRational::DyadicRational(mpz_class numerator, unsigned long exponent)
    : num_(std::move(numerator)), exp_(exponent) {
  normalize();
}

void DyadicRational::normalize() {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  const unsigned long twos = mpz_scan1(num_.get_mpz_t(), 0);
  const unsigned long shift = twos < exp_ ? twos : exp_;
  if (shift > 0) {
    num_ >>= shift;
    exp_ -= shift;
  }
}

mpq_class DyadicRational::to_rational() const {
  mpz_class den = 1;
  den <<= exp_;
  return make_rational(num_, den);
}

DyadicRational& DyadicRational::operator+=(const DyadicRational& o) {
  if (exp_ >= o.exp_) {
    num_ += mpz_class(o.num_ << (exp_ - o.exp_));
  } else {
    num_ = mpz_class(num_ << (o.exp_ - exp_)) + o.num_;
    exp_ = o.exp_;
  }
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const DyadicRational& a, const DyadicRational& b) {
  const unsigned long e = a.exp_ > b.exp_ ? a.exp_ : b.exp_;
  const mpz_class lhs = a.num_ << (e - a.exp_);
  const mpz_class rhs = b.num_ << (e - b.exp_);
  const int c = cmp(lhs, rhs);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string DyadicRational::to_string() const { return num_.get_str() + "/2^" + std::to_string(exp_); }

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpq_class make_rational(const mpz_class& num, const mpz_class& den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return c.get_str();
}

}  // namespace planegraph
