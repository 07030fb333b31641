#pragma once

#include "jetdiff/rational.hpp"

#include <mpfr.h>

#include <stdexcept>
#include <string>

namespace jetdiff {

/// The enclosure straddles an integer, so its floor is not determined at the
/// working precision. Maps to CLI exit code 3.
class FloorAmbiguous : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Default decimal digits for transcendental evaluations.
inline constexpr unsigned kDefaultDigits = 50;

mpfr_prec_t bits_for_digits(unsigned digits);

/// Closed interval [lo, hi] of MPFR floats with outward rounding. Every
/// operation returns an enclosure of the exact real result.
class Interval {
 public:
  explicit Interval(mpfr_prec_t precision);
  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(Interval other) noexcept;
  ~Interval();

  static Interval from_rational(const Rational& q, mpfr_prec_t precision);
  static Interval from_integer(const BigInt& z, mpfr_prec_t precision);
  static Interval pi(mpfr_prec_t precision);
  static Interval euler(mpfr_prec_t precision);

  mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);

  Interval exp() const;
  Interval log() const;   // natural log; requires lo > 0
  Interval log2() const;  // requires lo > 0
  Interval sqrt() const;  // requires lo >= 0
  Interval pow(unsigned long exponent) const;

  bool certainly_less(const Interval& other) const;
  bool certainly_greater(const Interval& other) const { return other.certainly_less(*this); }
  bool contains(const Rational& q) const;

  /// Exact floor when lo and hi share it; FloorAmbiguous otherwise.
  BigInt floor() const;

  double lower_double() const;
  double upper_double() const;
  double mid_double() const;
  /// Midpoint printed with the given number of significant digits.
  std::string to_string(unsigned digits = 20) const;

 private:
  mpfr_t lo_;
  mpfr_t hi_;
};

}  // namespace jetdiff
