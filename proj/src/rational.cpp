#include "jetdiff/rational.hpp"

#include <cctype>

namespace jetdiff {

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) {
    throw ParameterError("malformed rational literal: '" + std::string(s) + "'");
  }
  if (s[0] == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text));
  }
  BigInt num = parse_integer(text.substr(0, slash));
  BigInt den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw ParameterError("zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt lcm_range(unsigned long k) {
  BigInt r = 1;
  for (unsigned long i = 2; i <= k; ++i) {
    mpz_lcm_ui(r.get_mpz_t(), r.get_mpz_t(), i);
  }
  return r;
}

Rational pow(const Rational& base, unsigned long exponent) {
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  return Rational(num, den);
}

BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

BigInt floor(const Rational& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace jetdiff
