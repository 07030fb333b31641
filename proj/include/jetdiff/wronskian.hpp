#pragma once

#include "jetdiff/jet.hpp"
#include "jetdiff/jet_poly.hpp"
#include "jetdiff/linalg.hpp"
#include "jetdiff/polynomial.hpp"

#include <map>
#include <vector>

namespace jetdiff {

/// Rows l = 0..k, column j holds D^l(s_j o f)(0) as supplied by jets[j].
Matrix<Rational> section_jet_matrix(const std::vector<ScalarJet<Rational>>& jets);

/// W_k(s_0, ..., s_k)(f) at t = 0 from the jets of s_j o f (k+1 jets of
/// order >= k).
Rational wronskian_eval(const std::vector<ScalarJet<Rational>>& jets);

/// The same with s_j o f computed from polynomial sections and a curve jet.
Rational wronskian_symbolic(const std::vector<Polynomial>& sections, const CurveJet<Rational>& f);

/// The Wronskian as a jet differential of order k and weighted degree
/// k(k+1)/2 in r jet variables over n base variables.
JetPolynomial wronskian_operator(const std::vector<Polynomial>& sections, unsigned n, unsigned r);

/// The germ t -> W(t) to order K - k, where K is the common order of the
/// input jets. Its value at 0 is wronskian_eval(jets).
ScalarJet<Rational> wronskian_jet(const std::vector<ScalarJet<Rational>>& jets);

/// Both sides of W_k(g s_0, ..., g s_k) = g^{k+1} W_k(s_0, ..., s_k) along f,
/// at t = 0 and as jets of order f.order() - k.
struct FactorLawRecord {
  Rational scalar_lhs;
  Rational scalar_rhs;
  ScalarJet<Rational> jet_lhs;
  ScalarJet<Rational> jet_rhs;
  bool scalar_holds = false;
  bool jet_holds = false;
};

FactorLawRecord gcd_factor_law(const Polynomial& g, const std::vector<Polynomial>& sections,
                               const CurveJet<Rational>& f);

/// True iff the (k+1) x r' matrix has full column rank r'.
bool rank_condition(const Matrix<Rational>& m);

/// An alternating multilinear form V^degree -> Q on V = Q^dim, stored by its
/// values on increasing tuples of basis vectors.
class AlternatingForm {
 public:
  using Index = std::vector<unsigned>;

  AlternatingForm(unsigned dim, unsigned degree, std::map<Index, Rational> coefficients);

  /// Checks alternation of a dense tensor (dim^degree entries, row-major).
  static AlternatingForm from_tensor(unsigned dim, unsigned degree,
                                     const std::vector<Rational>& tensor);
  /// det on Q^dim.
  static AlternatingForm determinant(unsigned dim);

  unsigned dim() const { return dim_; }
  unsigned degree() const { return degree_; }
  bool is_zero() const { return coefficients_.empty(); }

  Rational operator()(const std::vector<std::vector<Rational>>& vectors) const;

 private:
  unsigned dim_;
  unsigned degree_;
  std::map<Index, Rational> coefficients_;
};

inline constexpr unsigned kMaxLocusDim = 8;

/// Whether (v_1, ..., v_N) satisfies Psi(v_J, h_{r+1}, ..., h_degree) = 0 for
/// every r-subset J and every choice of basis vectors h.
bool rank_locus_membership(const AlternatingForm& psi,
                           const std::vector<std::vector<Rational>>& vectors, unsigned r);

}  // namespace jetdiff
