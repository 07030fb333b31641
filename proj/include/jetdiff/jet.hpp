#pragma once

// Truncated jets of curves stored as derivative values D^l f(0), l = 0..order.
// The scalar type is generic: Rational for exact identities, double for
// sampling, Polynomial for symbolic jets whose entries are indeterminates.

#include "jetdiff/polynomial.hpp"
#include "jetdiff/rational.hpp"

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace jetdiff {

/// The jet lies outside the chart where the requested operation is defined
/// (e.g. a vanishing first derivative where a graph parametrization is needed).
class SingularJet : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

template <class S>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
  static Rational lift(const Rational& q) { return q; }
  static bool is_zero(const Rational& x) { return x == 0; }
};

template <>
struct ScalarOps<double> {
  static double lift(const Rational& q) { return q.get_d(); }
  static bool is_zero(double x) { return x == 0.0; }
};

template <>
struct ScalarOps<Polynomial> {
  static Polynomial lift(const Rational& q) { return Polynomial(q); }
  static bool is_zero(const Polynomial& x) { return x.is_zero(); }
};

template <class S>
class ScalarJet {
 public:
  explicit ScalarJet(std::vector<S> derivs) : derivs_(std::move(derivs)) {
    if (derivs_.empty()) throw ParameterError("a jet needs at least its value");
  }

  static ScalarJet constant(const S& c, unsigned order) {
    std::vector<S> d(order + 1, ScalarOps<S>::lift(Rational(0)));
    d[0] = c;
    return ScalarJet(std::move(d));
  }

  /// The jet of t -> base + t.
  static ScalarJet identity(unsigned order, const S& base = ScalarOps<S>::lift(Rational(0))) {
    ScalarJet j = constant(base, order);
    if (order >= 1) j.derivs_[1] = ScalarOps<S>::lift(Rational(1));
    return j;
  }

  static ScalarJet from_taylor(std::vector<S> coeffs) {
    BigInt fact = 1;
    for (std::size_t l = 0; l < coeffs.size(); ++l) {
      if (l > 1) fact *= static_cast<unsigned long>(l);
      if (l > 1) coeffs[l] = coeffs[l] * ScalarOps<S>::lift(Rational(fact));
    }
    return ScalarJet(std::move(coeffs));
  }

  unsigned order() const { return static_cast<unsigned>(derivs_.size() - 1); }
  const S& operator[](unsigned l) const { return derivs_.at(l); }
  const S& value() const { return derivs_[0]; }
  const std::vector<S>& derivs() const { return derivs_; }

  /// Taylor coefficients D^l f(0) / l!.
  std::vector<S> taylor() const {
    std::vector<S> c = derivs_;
    BigInt fact = 1;
    for (std::size_t l = 2; l < c.size(); ++l) {
      fact *= static_cast<unsigned long>(l);
      c[l] = c[l] * ScalarOps<S>::lift(Rational(BigInt(1), fact));
    }
    return c;
  }

  ScalarJet truncate(unsigned order) const {
    if (order > this->order()) throw ParameterError("cannot truncate a jet to a higher order");
    return ScalarJet(std::vector<S>(derivs_.begin(), derivs_.begin() + order + 1));
  }

  bool operator==(const ScalarJet& other) const { return derivs_ == other.derivs_; }

  friend ScalarJet operator+(const ScalarJet& a, const ScalarJet& b) {
    check_orders(a, b);
    std::vector<S> d(a.derivs_.size(), ScalarOps<S>::lift(Rational(0)));
    for (std::size_t l = 0; l < d.size(); ++l) d[l] = a.derivs_[l] + b.derivs_[l];
    return ScalarJet(std::move(d));
  }

  friend ScalarJet operator-(const ScalarJet& a, const ScalarJet& b) {
    check_orders(a, b);
    std::vector<S> d(a.derivs_.size(), ScalarOps<S>::lift(Rational(0)));
    for (std::size_t l = 0; l < d.size(); ++l) d[l] = a.derivs_[l] - b.derivs_[l];
    return ScalarJet(std::move(d));
  }

  /// Leibniz rule: (ab)^(l) = sum_j C(l,j) a^(j) b^(l-j).
  friend ScalarJet operator*(const ScalarJet& a, const ScalarJet& b) {
    check_orders(a, b);
    const std::size_t size = a.derivs_.size();
    std::vector<S> d(size, ScalarOps<S>::lift(Rational(0)));
    for (std::size_t l = 0; l < size; ++l) {
      S acc = ScalarOps<S>::lift(Rational(0));
      for (std::size_t j = 0; j <= l; ++j) {
        if (ScalarOps<S>::is_zero(a.derivs_[j]) || ScalarOps<S>::is_zero(b.derivs_[l - j])) continue;
        S term = a.derivs_[j] * b.derivs_[l - j];
        if (j != 0 && j != l) term = term * ScalarOps<S>::lift(Rational(binomial(l, j)));
        acc = acc + term;
      }
      d[l] = std::move(acc);
    }
    return ScalarJet(std::move(d));
  }

  friend ScalarJet operator*(const S& scalar, const ScalarJet& a) {
    std::vector<S> d = a.derivs_;
    for (auto& x : d) x = scalar * x;
    return ScalarJet(std::move(d));
  }

  ScalarJet operator-() const {
    std::vector<S> d = derivs_;
    for (auto& x : d) x = ScalarOps<S>::lift(Rational(0)) - x;
    return ScalarJet(std::move(d));
  }

 private:
  static void check_orders(const ScalarJet& a, const ScalarJet& b) {
    if (a.order() != b.order()) {
      throw ParameterError("jet order mismatch: " + std::to_string(a.order()) + " vs " +
                           std::to_string(b.order()));
    }
  }

  std::vector<S> derivs_;
};

namespace detail {

/// Product of two Taylor series truncated after degree `order`.
template <class S>
std::vector<S> series_mul(const std::vector<S>& a, const std::vector<S>& b, unsigned order) {
  std::vector<S> c(order + 1, ScalarOps<S>::lift(Rational(0)));
  for (unsigned i = 0; i <= order && i < a.size(); ++i) {
    if (ScalarOps<S>::is_zero(a[i])) continue;
    for (unsigned j = 0; i + j <= order && j < b.size(); ++j) {
      if (ScalarOps<S>::is_zero(b[j])) continue;
      c[i + j] = c[i + j] + a[i] * b[j];
    }
  }
  return c;
}

/// Horner evaluation f(p(t)) on Taylor coefficients; p has no constant term.
template <class S>
std::vector<S> series_compose(const std::vector<S>& f, const std::vector<S>& p, unsigned order) {
  std::vector<S> g(order + 1, ScalarOps<S>::lift(Rational(0)));
  g[0] = f[order];
  for (unsigned j = order; j-- > 0;) {
    g = series_mul(p, g, order);
    g[0] = g[0] + f[j];
  }
  return g;
}

}  // namespace detail

/// A k-jet of a change of parameter t -> a1 t + a2 t^2 + ..., a1 != 0.
template <class S>
class Reparam {
 public:
  explicit Reparam(ScalarJet<S> jet) : jet_(std::move(jet)) {
    if (jet_.order() < 1) throw ParameterError("a reparametrization jet needs order >= 1");
    if (!ScalarOps<S>::is_zero(jet_[0])) throw ParameterError("reparametrization must fix 0");
    if (ScalarOps<S>::is_zero(jet_[1])) {
      throw ParameterError("reparametrization must have nonzero first derivative");
    }
  }

  static Reparam identity(unsigned order) { return Reparam(ScalarJet<S>::identity(order)); }

  static Reparam homothety(const S& lambda, unsigned order) {
    ScalarJet<S> j = ScalarJet<S>::identity(order);
    return Reparam(lambda * j);
  }

  const ScalarJet<S>& jet() const { return jet_; }
  unsigned order() const { return jet_.order(); }
  const S& first_derivative() const { return jet_[1]; }

  bool operator==(const Reparam& other) const { return jet_ == other.jet_; }

 private:
  ScalarJet<S> jet_;
};

/// Derivative data of f o phi at 0, truncated at f's order.
template <class S>
ScalarJet<S> compose(const ScalarJet<S>& f, const Reparam<S>& phi) {
  const unsigned order = f.order();
  if (phi.order() < order) {
    throw ParameterError("reparametrization order " + std::to_string(phi.order()) +
                         " is below the jet order " + std::to_string(order));
  }
  std::vector<S> p = phi.jet().truncate(order).taylor();
  return ScalarJet<S>::from_taylor(detail::series_compose(f.taylor(), p, order));
}

/// psi o phi.
template <class S>
Reparam<S> compose(const Reparam<S>& psi, const Reparam<S>& phi) {
  return Reparam<S>(compose(psi.jet(), phi));
}

/// Compositional inverse to the stored order, by order-by-order reversion.
template <class S>
Reparam<S> invert(const Reparam<S>& phi) {
  const unsigned order = phi.order();
  const std::vector<S> p = phi.jet().taylor();
  const S zero = ScalarOps<S>::lift(Rational(0));
  std::vector<S> psi(order + 1, zero);
  psi[1] = ScalarOps<S>::lift(Rational(1)) / p[1];
  for (unsigned l = 2; l <= order; ++l) {
    const std::vector<S> c = detail::series_compose(p, psi, l);
    psi[l] = (zero - c[l]) / p[1];
  }
  return Reparam<S>(ScalarJet<S>::from_taylor(std::move(psi)));
}

template <class S>
class CurveJet {
 public:
  explicit CurveJet(std::vector<ScalarJet<S>> components) : components_(std::move(components)) {
    if (components_.empty()) throw ParameterError("a curve jet needs at least one component");
    for (const auto& c : components_) {
      if (c.order() != components_.front().order()) {
        throw ParameterError("curve jet components must share one order");
      }
    }
  }

  unsigned ambient_dim() const { return static_cast<unsigned>(components_.size()); }
  unsigned order() const { return components_.front().order(); }
  const ScalarJet<S>& operator[](unsigned i) const { return components_.at(i); }
  const std::vector<ScalarJet<S>>& components() const { return components_; }

  std::vector<S> base_point() const { return block(0); }

  /// The vector (f_1^(s)(0), ..., f_n^(s)(0)).
  std::vector<S> block(unsigned s) const {
    std::vector<S> v;
    v.reserve(components_.size());
    for (const auto& c : components_) v.push_back(c[s]);
    return v;
  }

  bool operator==(const CurveJet& other) const { return components_ == other.components_; }

 private:
  std::vector<ScalarJet<S>> components_;
};

template <class S>
CurveJet<S> compose(const CurveJet<S>& f, const Reparam<S>& phi) {
  std::vector<ScalarJet<S>> out;
  out.reserve(f.ambient_dim());
  for (const auto& c : f.components()) out.push_back(compose(c, phi));
  return CurveJet<S>(std::move(out));
}

/// A polynomial map C^arity -> C^m.
struct PolynomialMap {
  unsigned arity = 0;
  std::vector<Polynomial> components;
};

/// The jet of Psi o f, computed by evaluating Psi in the jet ring.
template <class S>
CurveJet<S> map_compose(const PolynomialMap& psi, const CurveJet<S>& f) {
  if (psi.arity != f.ambient_dim()) {
    throw ParameterError("map arity " + std::to_string(psi.arity) +
                         " does not match curve dimension " + std::to_string(f.ambient_dim()));
  }
  const unsigned order = f.order();
  auto lift = [order](const Rational& q) {
    return ScalarJet<S>::constant(ScalarOps<S>::lift(q), order);
  };
  std::vector<ScalarJet<S>> out;
  out.reserve(psi.components.size());
  for (const auto& p : psi.components) {
    if (p.num_vars() > psi.arity) throw ParameterError("map component uses too many variables");
    out.push_back(evaluate_in<ScalarJet<S>>(p, std::span(f.components()), lift));
  }
  if (out.empty()) throw ParameterError("map has no components");
  return CurveJet<S>(std::move(out));
}

/// lambda . (f', f'', ..., f^(k)) = (lambda f', lambda^2 f'', ..., lambda^k f^(k)).
template <class S>
CurveJet<S> weighted_scale(const S& lambda, const CurveJet<S>& f) {
  std::vector<ScalarJet<S>> out;
  for (const auto& c : f.components()) {
    std::vector<S> d = c.derivs();
    S power = lambda;
    for (std::size_t l = 1; l < d.size(); ++l) {
      d[l] = power * d[l];
      power = power * lambda;
    }
    out.emplace_back(std::move(d));
  }
  return CurveJet<S>(std::move(out));
}

/// Reparametrizes f by the inverse of its r-th component, so that component
/// becomes t -> f_r(0) + t. Throws SingularJet when f_r'(0) = 0.
template <class S>
CurveJet<S> graph_reparametrize(const CurveJet<S>& f, unsigned r_index) {
  if (r_index >= f.ambient_dim()) throw ParameterError("graph index out of range");
  if (f.order() == 0) return f;
  const ScalarJet<S>& fr = f[r_index];
  if (ScalarOps<S>::is_zero(fr[1])) {
    throw SingularJet("component " + std::to_string(r_index) +
                      " has vanishing first derivative; no graph chart");
  }
  std::vector<S> d = fr.derivs();
  d[0] = ScalarOps<S>::lift(Rational(0));
  const Reparam<S> inverse = invert(Reparam<S>(ScalarJet<S>(std::move(d))));
  return compose(f, inverse);
}

}  // namespace jetdiff
