#pragma once

#include "jetdiff/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace jetdiff {

/// Exponent vector of a monomial. Trailing zero exponents are trimmed, so two
/// monomials are equal iff their exponent vectors compare equal.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exponents);

  static Monomial variable(std::size_t var, std::uint32_t power = 1);

  std::uint32_t exponent(std::size_t var) const {
    return var < exps_.size() ? exps_[var] : 0;
  }
  /// One past the highest variable index that occurs.
  std::size_t num_vars() const { return exps_.size(); }
  unsigned total_degree() const;
  const std::vector<std::uint32_t>& exponents() const { return exps_; }

  Monomial operator*(const Monomial& other) const;
  auto operator<=>(const Monomial&) const = default;

 private:
  void trim();
  std::vector<std::uint32_t> exps_;
};

/// Sparse multivariate polynomial with rational coefficients. Variables are
/// addressed by index; no zero coefficient is ever stored.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  Polynomial() = default;
  Polynomial(long constant);  // NOLINT(google-explicit-constructor)
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)

  static Polynomial variable(std::size_t var);
  static Polynomial term(const Monomial& m, const Rational& coeff);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  std::size_t num_vars() const;
  unsigned total_degree() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  Polynomial operator-() const;
  bool operator==(const Polynomial& other) const { return terms_ == other.terms_; }

  Polynomial pow(unsigned exponent) const;
  Polynomial derivative(std::size_t var) const;

  /// Missing trailing coordinates are an error when the variable occurs.
  Rational evaluate(std::span<const Rational> point) const;

  /// Replaces variable i by values[i].
  Polynomial substitute(std::span<const Polynomial> values) const;

  void add_term(const Monomial& m, const Rational& coeff);

  std::string to_string() const;

 private:
  TermMap terms_;
};

/// Evaluates p in an arbitrary commutative ring R (jets, doubles, ...).
/// `lift` maps a rational coefficient into R.
template <class R, class Lift>
R evaluate_in(const Polynomial& p, std::span<const R> values, Lift lift) {
  R result = lift(Rational(0));
  if (p.num_vars() > values.size()) {
    throw ParameterError("polynomial uses more variables than values supplied");
  }
  std::vector<std::vector<R>> powers(values.size());
  auto power = [&](std::size_t v, std::uint32_t e) -> const R& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(lift(Rational(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * values[v]);
    return cache[e];
  };
  for (const auto& [mono, coeff] : p.terms()) {
    R t = lift(coeff);
    const auto& exps = mono.exponents();
    for (std::size_t v = 0; v < exps.size(); ++v) {
      if (exps[v] != 0) t = t * power(v, exps[v]);
    }
    result = result + t;
  }
  return result;
}

}  // namespace jetdiff
