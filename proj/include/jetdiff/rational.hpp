#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace jetdiff {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Invalid parameters or malformed input. Maps to CLI exit code 2.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation would exceed the configured size guard.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Always "p/q", including integers ("2/1"), so JSON consumers see one shape.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

/// Accepts "p/q" or a bare integer "p". Throws ParameterError otherwise.
Rational parse_rational(std::string_view text);

BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);
BigInt lcm_range(unsigned long k);

Rational pow(const Rational& base, unsigned long exponent);
BigInt pow(const BigInt& base, unsigned long exponent);

/// Largest integer <= q.
BigInt floor(const Rational& q);

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace jetdiff
