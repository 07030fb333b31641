#pragma once

#include "jetdiff/rational.hpp"

#include <vector>

namespace jetdiff {

/// Number of jet monomials of weighted degree m with k orders and r variables
/// per order: the coefficient of x^m in prod_{s=1..k} (1 - x^s)^{-r}.
BigInt egg_dim(unsigned k, unsigned r, unsigned m);

/// One graded piece S^{l_1}V* (x) ... (x) S^{l_k}V*.
struct GradedPiece {
  std::vector<unsigned> ell;
  BigInt dim;
};

/// All l with l_1 + 2 l_2 + ... + k l_k = m, in lexicographic order of l.
std::vector<GradedPiece> graded_dims(unsigned k, unsigned r, unsigned m);

/// lcm(1, ..., k).
BigInt lcm_weights(unsigned k);

/// 1 / (a_1 ... a_k).
Rational wp_volume(const std::vector<long>& a);
/// 1 / prod a_s^{r_s}.
Rational wp_volume_r(const std::vector<long>& a, const std::vector<unsigned>& r);

/// Integral of prod x_s^{e_s} over the standard simplex in R^{k-1}
/// (Lebesgue measure on x_1..x_{k-1}): prod e_s! / (sum e_s + k - 1)!.
Rational simplex_moment(const std::vector<unsigned>& e);

/// Integral of prod x_s^{m_s} against the probability measure
/// (kr-1)!/(r-1)!^k (x_1...x_k)^{r-1} dx on the simplex.
Rational nu_moment(unsigned k, unsigned r, const std::vector<unsigned>& m);

}  // namespace jetdiff
