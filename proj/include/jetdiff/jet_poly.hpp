#pragma once

#include "jetdiff/jet.hpp"
#include "jetdiff/polynomial.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace jetdiff {

/// Exponents (alpha_1, ..., alpha_k) of a jet monomial, flattened block-major:
/// entry (s-1)*r + i is the power of f_i^(s).
using JetExponent = std::vector<std::uint32_t>;

/// Exponents (a_1, ..., a_k) of phi'(0)^a_1 ... phi^(k)(0)^a_k.
using ReparamExponent = std::vector<std::uint32_t>;

/// sum_s s |alpha_s|.
unsigned weighted_degree(const JetExponent& alpha, unsigned k, unsigned r);
unsigned weighted_degree(const ReparamExponent& alpha);

/// A polynomial differential operator
///   Q(f) = sum a_alpha(f) (f')^alpha_1 ... (f^(k))^alpha_k
/// of jet order k, with r jet variables per order and coefficients that are
/// polynomials in n base variables z_0..z_{n-1}. Jets are taken tangent to the
/// span of the first r coordinate directions; the remaining n - r base
/// coordinates only enter through the coefficients.
class JetPolynomial {
 public:
  using TermMap = std::map<JetExponent, Polynomial>;

  JetPolynomial(unsigned k, unsigned r, unsigned n);

  /// Single term coeff * xi^alpha.
  static JetPolynomial monomial(unsigned k, unsigned r, unsigned n, JetExponent alpha,
                                Polynomial coeff = Polynomial(1L));

  unsigned k() const { return k_; }
  unsigned r() const { return r_; }
  unsigned n() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(JetExponent alpha, const Polynomial& coeff);

  /// The common weighted degree, if every term has the same one.
  std::optional<unsigned> homogeneous_degree() const;

  /// Same operator viewed at a higher jet order (zero-padded exponents).
  JetPolynomial with_order(unsigned k) const;

  JetPolynomial& operator+=(const JetPolynomial& other);
  JetPolynomial& operator-=(const JetPolynomial& other);
  JetPolynomial& operator*=(const Rational& scalar);
  friend JetPolynomial operator+(JetPolynomial a, const JetPolynomial& b) { return a += b; }
  friend JetPolynomial operator-(JetPolynomial a, const JetPolynomial& b) { return a -= b; }
  friend JetPolynomial operator*(const Rational& s, JetPolynomial a) { return a *= s; }
  friend JetPolynomial operator*(const JetPolynomial& a, const JetPolynomial& b);
  bool operator==(const JetPolynomial& other) const = default;

  /// Flat polynomial over z (indices 0..n-1) and xi (n + (s-1)*r + i).
  Polynomial to_flat() const;
  /// Inverse of to_flat; throws ParameterError if variables beyond the jet
  /// block occur.
  static JetPolynomial from_flat(const Polynomial& p, unsigned k, unsigned r, unsigned n);

  std::string to_string() const;

 private:
  void check_compatible(const JetPolynomial& other) const;

  unsigned k_;
  unsigned r_;
  unsigned n_;
  TermMap terms_;
};

/// Flat variable index of xi_{s,i} (s in 1..k, i in 0..r-1).
inline std::size_t jet_variable(unsigned n, unsigned r, unsigned s, unsigned i) {
  return n + static_cast<std::size_t>(s - 1) * r + i;
}

/// The generic curve jet f_i = (z_i, xi_{1,i}, ..., xi_{k,i}) for i < r, with
/// the remaining coordinates constant at z_i.
CurveJet<Polynomial> symbolic_curve_jet(unsigned k, unsigned r, unsigned n);

/// Q(f', ..., f^(k)) with coefficients evaluated at f(0).
Rational evaluate(const JetPolynomial& p, const CurveJet<Rational>& f);

/// The operator phi^*P with (phi^*P)(f) = P(f o phi).
JetPolynomial gk_pullback(const JetPolynomial& p, const Reparam<Rational>& phi);

/// The components P_alpha with (phi^*P)(f) = sum_alpha phi^(alpha)(0) P_alpha(f),
/// phi^(alpha) = phi'^a_1 ... phi^(k)^a_k. Keys have length k. Requires P
/// homogeneous (ParameterError otherwise); the zero operator decomposes to {}.
std::map<ReparamExponent, JetPolynomial> alpha_decompose(const JetPolynomial& p);

/// True iff P((f o phi)) = phi'(0)^m P(f) for all reparametrizations.
bool is_invariant(const JetPolynomial& p);

struct ExtractedInvariant {
  JetPolynomial op;
  unsigned degree = 0;
  ReparamExponent alpha;
};

/// A nonzero component P_alpha0 of minimal degree alpha_1 + ... + alpha_k;
/// ties go to the lexicographically smallest alpha.
ExtractedInvariant invariant_extract(const JetPolynomial& p);

/// The formal derivative d/dt Q(f(t)): order k+1, weighted degree m+1.
JetPolynomial total_derivative(const JetPolynomial& p);

}  // namespace jetdiff
