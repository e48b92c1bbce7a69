#include "planegraph/interval.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace planegraph {

namespace {

// 50 decimal places; OEIS A001620.
constexpr const char* kEulerGamma50 = "0.57721566490153286060651209008240243104215933593992";

mpfr_prec_t max_prec(const Interval& a, const Interval& b) { return std::max(a.precision(), b.precision()); }

std::string to_decimal(const __mpfr_struct* x, int digits, mpfr_rnd_t rnd) {
  mpfr_exp_t exp = 0;
  char* s = mpfr_get_str(nullptr, &exp, 10, static_cast<std::size_t>(digits), x, rnd);
  if (s == nullptr) return "nan";
  std::string mant(s);
  mpfr_free_str(s);
  if (mpfr_zero_p(x)) return "0";
  bool neg = !mant.empty() && mant[0] == '-';
  if (neg) mant.erase(0, 1);
  std::string out = neg ? "-" : "";
  out += mant.substr(0, 1) + "." + mant.substr(1) + "e" + std::to_string(exp - 1);
  return out;
}

}  // namespace

Interval::Interval(Precision prec) {
  mpfr_init2(lo_, prec.bits);
  mpfr_init2(hi_, prec.bits);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const mpq_class& q, mpfr_prec_t prec) : Interval(Precision{prec}) {
  mpfr_set_q(lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, q.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(long v, mpfr_prec_t prec) : Interval(Precision{prec}) {
  mpfr_set_si(lo_, v, MPFR_RNDD);
  mpfr_set_si(hi_, v, MPFR_RNDU);
}

Interval::Interval(const Interval& o) : Interval(Precision{o.precision()}) {
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : Interval(Precision{o.precision()}) {
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(Interval o) noexcept {
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::from_decimal(const std::string& digits, const std::string& radius, mpfr_prec_t prec) {
  Interval mid(Interval::Precision{prec});
  mpfr_set_str(mid.lo_, digits.c_str(), 10, MPFR_RNDD);
  mpfr_set_str(mid.hi_, digits.c_str(), 10, MPFR_RNDU);
  Interval r(Interval::Precision{prec});
  mpfr_set_str(r.lo_, radius.c_str(), 10, MPFR_RNDD);
  mpfr_set_str(r.hi_, radius.c_str(), 10, MPFR_RNDU);
  Interval out(Interval::Precision{prec});
  mpfr_sub(out.lo_, mid.lo_, r.hi_, MPFR_RNDD);
  mpfr_add(out.hi_, mid.hi_, r.hi_, MPFR_RNDU);
  return out;
}

Interval Interval::from_mpz(const mpz_class& z, mpfr_prec_t prec) {
  Interval out(Interval::Precision{prec});
  mpfr_set_z(out.lo_, z.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(out.hi_, z.get_mpz_t(), MPFR_RNDU);
  return out;
}

Interval Interval::pi(mpfr_prec_t prec) {
  Interval out(Interval::Precision{prec});
  mpfr_const_pi(out.lo_, MPFR_RNDD);
  mpfr_const_pi(out.hi_, MPFR_RNDU);
  return out;
}

Interval Interval::ln2(mpfr_prec_t prec) {
  Interval out(Interval::Precision{prec});
  mpfr_const_log2(out.lo_, MPFR_RNDD);
  mpfr_const_log2(out.hi_, MPFR_RNDU);
  return out;
}

Interval Interval::euler_gamma(mpfr_prec_t prec) { return from_decimal(kEulerGamma50, "1e-50", prec); }

Interval operator+(const Interval& a, const Interval& b) {
  Interval out(Interval::Precision{max_prec(a, b)});
  mpfr_add(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return out;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval out(Interval::Precision{max_prec(a, b)});
  mpfr_sub(out.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(out.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return out;
}

Interval operator*(const Interval& a, const Interval& b) {
  const mpfr_prec_t prec = max_prec(a, b);
  Interval out(Interval::Precision{prec});
  mpfr_t t;
  mpfr_init2(t, prec);
  bool first = true;
  for (const auto* x : {a.lo_, a.hi_})
    for (const auto* y : {b.lo_, b.hi_}) {
      mpfr_mul(t, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t, out.lo_)) mpfr_set(out.lo_, t, MPFR_RNDD);
      mpfr_mul(t, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t, out.hi_)) mpfr_set(out.hi_, t, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(t);
  return out;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (!(mpfr_sgn(b.lo_) > 0 || mpfr_sgn(b.hi_) < 0)) throw std::domain_error("Interval: division by interval containing 0");
  const mpfr_prec_t prec = max_prec(a, b);
  Interval out(Interval::Precision{prec});
  mpfr_t t;
  mpfr_init2(t, prec);
  bool first = true;
  for (const auto* x : {a.lo_, a.hi_})
    for (const auto* y : {b.lo_, b.hi_}) {
      mpfr_div(t, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t, out.lo_)) mpfr_set(out.lo_, t, MPFR_RNDD);
      mpfr_div(t, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t, out.hi_)) mpfr_set(out.hi_, t, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(t);
  return out;
}

Interval log(const Interval& a) {
  if (mpfr_sgn(a.lo_) <= 0) throw std::domain_error("Interval: log of non-positive interval");
  Interval out(Interval::Precision{a.precision()});
  mpfr_log(out.lo_, a.lo_, MPFR_RNDD);
  mpfr_log(out.hi_, a.hi_, MPFR_RNDU);
  return out;
}

Interval exp(const Interval& a) {
  Interval out(Interval::Precision{a.precision()});
  mpfr_exp(out.lo_, a.lo_, MPFR_RNDD);
  mpfr_exp(out.hi_, a.hi_, MPFR_RNDU);
  return out;
}

Interval sqrt(const Interval& a) {
  if (mpfr_sgn(a.lo_) < 0) throw std::domain_error("Interval: sqrt of negative interval");
  Interval out(Interval::Precision{a.precision()});
  mpfr_sqrt(out.lo_, a.lo_, MPFR_RNDD);
  mpfr_sqrt(out.hi_, a.hi_, MPFR_RNDU);
  return out;
}

bool Interval::certainly_positive() const { return mpfr_sgn(lo_) > 0; }
bool Interval::certainly_nonnegative() const { return mpfr_sgn(lo_) >= 0; }
bool Interval::certainly_less(const Interval& o) const { return mpfr_less_p(hi_, o.lo_) != 0; }

Interval Interval::width() const {
  Interval out(Interval::Precision{precision()});
  mpfr_sub(out.lo_, hi_, lo_, MPFR_RNDD);
  mpfr_sub(out.hi_, hi_, lo_, MPFR_RNDU);
  return out;
}

double Interval::lower_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::upper_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
double Interval::mid_double() const { return 0.5 * (lower_double() + upper_double()); }
std::string Interval::lower_string(int digits) const { return to_decimal(lo_, digits, MPFR_RNDD); }
std::string Interval::upper_string(int digits) const { return to_decimal(hi_, digits, MPFR_RNDU); }

}  // namespace planegraph
