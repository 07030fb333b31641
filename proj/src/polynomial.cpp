#include "jetdiff/polynomial.hpp"

#include <numeric>
#include <sstream>

namespace jetdiff {

Monomial::Monomial(std::vector<std::uint32_t> exponents) : exps_(std::move(exponents)) {
  trim();
}

Monomial Monomial::variable(std::size_t var, std::uint32_t power) {
  std::vector<std::uint32_t> e(var + 1, 0);
  e[var] = power;
  return Monomial(std::move(e));
}

unsigned Monomial::total_degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

Monomial Monomial::operator*(const Monomial& other) const {
  const auto& longer = exps_.size() >= other.exps_.size() ? exps_ : other.exps_;
  const auto& shorter = exps_.size() >= other.exps_.size() ? other.exps_ : exps_;
  std::vector<std::uint32_t> e = longer;
  for (std::size_t i = 0; i < shorter.size(); ++i) e[i] += shorter[i];
  Monomial m;
  m.exps_ = std::move(e);
  return m;
}

void Monomial::trim() {
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
}

Polynomial::Polynomial(long constant) : Polynomial(Rational(constant)) {}

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

Polynomial Polynomial::variable(std::size_t var) {
  return term(Monomial::variable(var), Rational(1));
}

Polynomial Polynomial::term(const Monomial& m, const Rational& coeff) {
  Polynomial p;
  p.add_term(m, coeff);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.num_vars() == 0);
}

Rational Polynomial::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

std::size_t Polynomial::num_vars() const {
  std::size_t n = 0;
  for (const auto& [m, c] : terms_) n = std::max(n, m.num_vars());
  return n;
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

void Polynomial::add_term(const Monomial& m, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      r.add_term(ma * mb, ca * cb);
    }
  }
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result(1L);
  Polynomial base = *this;
  while (exponent != 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent != 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial r;
  for (const auto& [m, c] : terms_) {
    const std::uint32_t e = m.exponent(var);
    if (e == 0) continue;
    std::vector<std::uint32_t> exps = m.exponents();
    exps[var] -= 1;
    r.add_term(Monomial(std::move(exps)), c * e);
  }
  return r;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  return evaluate_in<Rational>(*this, point, [](const Rational& q) { return q; });
}

Polynomial Polynomial::substitute(std::span<const Polynomial> values) const {
  return evaluate_in<Polynomial>(*this, values, [](const Rational& q) { return Polynomial(q); });
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << jetdiff::to_string(c);
    const auto& e = m.exponents();
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      os << "*x" << v;
      if (e[v] != 1) os << '^' << e[v];
    }
  }
  return os.str();
}

}  // namespace jetdiff
