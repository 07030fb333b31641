#include "jetdiff/interval.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

namespace jetdiff {

mpfr_prec_t bits_for_digits(unsigned digits) {
  // log2(10) < 3.33; a few guard bits on top.
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.33)) + 16;
}

Interval::Interval(mpfr_prec_t precision) {
  mpfr_init2(lo_, precision);
  mpfr_init2(hi_, precision);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& other) {
  mpfr_init2(lo_, other.precision());
  mpfr_init2(hi_, other.precision());
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : Interval(other.precision()) {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(Interval other) noexcept {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::from_rational(const Rational& q, mpfr_prec_t precision) {
  Interval r(precision);
  mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::from_integer(const BigInt& z, mpfr_prec_t precision) {
  Interval r(precision);
  mpfr_set_z(r.lo_, z.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, z.get_mpz_t(), MPFR_RNDU);
  return r;
}

Interval Interval::pi(mpfr_prec_t precision) {
  Interval r(precision);
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::euler(mpfr_prec_t precision) {
  Interval one = from_integer(BigInt(1), precision);
  return one.exp();
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(std::max(a.precision(), b.precision()));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(std::max(a.precision(), b.precision()));
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  const mpfr_prec_t prec = std::max(a.precision(), b.precision());
  Interval r(prec);
  mpfr_t t;
  mpfr_init2(t, prec);
  const mpfr_srcptr as[2] = {a.lo_, a.hi_};
  const mpfr_srcptr bs[2] = {b.lo_, b.hi_};
  bool first = true;
  for (auto x : as) {
    for (auto y : bs) {
      mpfr_mul(t, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_mul(t, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (mpfr_sgn(b.lo_) <= 0 && mpfr_sgn(b.hi_) >= 0) {
    throw std::domain_error("interval division by an enclosure of zero");
  }
  const mpfr_prec_t prec = std::max(a.precision(), b.precision());
  Interval inv(prec);
  mpfr_ui_div(inv.lo_, 1, b.hi_, MPFR_RNDD);
  mpfr_ui_div(inv.hi_, 1, b.lo_, MPFR_RNDU);
  return a * inv;
}

Interval Interval::exp() const {
  Interval r(precision());
  mpfr_exp(r.lo_, lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::log() const {
  if (mpfr_sgn(lo_) <= 0) throw std::domain_error("log of a non-positive enclosure");
  Interval r(precision());
  mpfr_log(r.lo_, lo_, MPFR_RNDD);
  mpfr_log(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::log2() const {
  if (mpfr_sgn(lo_) <= 0) throw std::domain_error("log2 of a non-positive enclosure");
  Interval r(precision());
  mpfr_log2(r.lo_, lo_, MPFR_RNDD);
  mpfr_log2(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::sqrt() const {
  if (mpfr_sgn(lo_) < 0) throw std::domain_error("sqrt of a negative enclosure");
  Interval r(precision());
  mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::pow(unsigned long exponent) const {
  Interval result = from_integer(BigInt(1), precision());
  for (unsigned long i = 0; i < exponent; ++i) result = result * *this;
  return result;
}

bool Interval::certainly_less(const Interval& other) const {
  return mpfr_less_p(hi_, other.lo_) != 0;
}

bool Interval::contains(const Rational& q) const {
  return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

BigInt Interval::floor() const {
  BigInt flo, fhi;
  mpfr_get_z(flo.get_mpz_t(), lo_, MPFR_RNDD);
  mpfr_get_z(fhi.get_mpz_t(), hi_, MPFR_RNDD);
  if (flo != fhi) {
    throw FloorAmbiguous("floor is ambiguous at " + std::to_string(precision()) +
                         " bits: enclosure " + to_string(30) +
                         " straddles an integer; retry with more digits");
  }
  return flo;
}

double Interval::lower_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::upper_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Interval::mid_double() const {
  return 0.5 * (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN));
}

std::string Interval::to_string(unsigned digits) const {
  mpfr_t mid;
  mpfr_init2(mid, precision() + 1);
  mpfr_add(mid, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
  std::vector<char> buf(digits + 64);
  const std::string fmt = "%." + std::to_string(digits) + "Rg";
  const int len = mpfr_snprintf(buf.data(), buf.size(), fmt.c_str(), mid);
  mpfr_clear(mid);
  if (len < 0) return "nan";
  if (static_cast<std::size_t>(len) >= buf.size()) {
    buf.resize(static_cast<std::size_t>(len) + 1);
    mpfr_t again;
    mpfr_init2(again, precision() + 1);
    mpfr_add(again, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(again, again, 1, MPFR_RNDN);
    mpfr_snprintf(buf.data(), buf.size(), fmt.c_str(), again);
    mpfr_clear(again);
  }
  return std::string(buf.data());
}

}  // namespace jetdiff
