#pragma once

#include "jetdiff/rational.hpp"

#include <vector>

namespace jetdiff {

/// dim X_k = n + k(r - 1).
unsigned long semple_dim(unsigned n, unsigned r, unsigned k);
/// Rank of the directed structure V_k; r at every level.
unsigned semple_rank(unsigned n, unsigned r, unsigned k);

/// Weights a_1, ..., a_k of O_{X_k}(a).
using WeightVector = std::vector<Rational>;

/// b_j = a_1 + ... + a_j.
WeightVector weight_to_b(const WeightVector& a);
/// Inverse of weight_to_b.
WeightVector first_differences(const WeightVector& b);
/// b in N^k, the condition under which O_{X_k}(b) is a pullback of O(1)s.
bool b_nonneg(const WeightVector& b);

/// Sufficient criteria for O_{X_k}(a) (x) pi^*A^p to be nef resp. ample:
///   a_j >= 3 a_{j+1} (j <= k-2), a_{k-1} >= 2 a_k >= 0, p >= 2 sum a_j,
/// with the last two conditions strict for ampleness. For k = 1 only
/// a_1 >= 0 (> 0) and the p bound remain.
bool is_nef_weight(const WeightVector& a, const Rational& p);
bool is_ample_weight(const WeightVector& a, const Rational& p);

struct WeightedTwist {
  WeightVector weight;
  Rational p;
};

/// L_k = O(3^{k-1}, ..., 3, 1) (x) A^{3^k}.
WeightedTwist lk_weight(unsigned k);
/// L'_k = O(2 3^{k-2}, ..., 6, 2, 1) (x) A^{2 3^{k-1}}; L'_1 = O(1) (x) A^2.
WeightedTwist lk_prime_weight(unsigned k);

/// O_{X_k}(weight) (x) pi^*A^{base_twist} (x) pi^*K_V^{kv_mult}, kept formal.
struct TautologicalClass {
  WeightVector weight;
  Rational base_twist;
  Rational kv_mult;

  TautologicalClass& operator+=(const TautologicalClass& other);
  friend TautologicalClass operator+(TautologicalClass a, const TautologicalClass& b) {
    return a += b;
  }
  TautologicalClass operator-() const;
  friend TautologicalClass operator-(const TautologicalClass& a, const TautologicalClass& b) {
    return a + (-b);
  }
  bool operator==(const TautologicalClass&) const = default;
};

/// Pullback from X_k to X_{k+1}: the new slot gets weight 0.
TautologicalClass pullback(const TautologicalClass& c);

/// O_{X_k}(weight) on its own.
TautologicalClass tautological(WeightVector weight);

/// K_{V_k} = pi^*K_V (x) O_{X_k}(-(r-1) 1).
TautologicalClass canonical_twist(unsigned r, unsigned k);

struct GglTwist {
  TautologicalClass cls;
  Rational p;
};

/// K_{V_k} (x) O((r-1) 1 + eps c) = pi^*K_V (x) O(eps c) with c the L'_k
/// weight, and total degree p = (r-1)k + eps |c|.
GglTwist ggl_twist(unsigned r, unsigned k, const Rational& eps);

}  // namespace jetdiff
