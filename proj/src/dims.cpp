#include "jetdiff/dims.hpp"

namespace jetdiff {

BigInt egg_dim(unsigned k, unsigned r, unsigned m) {
  if (k < 1 || r < 1) throw ParameterError("need k, r >= 1");
  // Multiply by (1 - x^s)^{-1} r times per s; each factor is a prefix sum
  // with stride s.
  std::vector<BigInt> coeff(m + 1, 0);
  coeff[0] = 1;
  for (unsigned s = 1; s <= k; ++s) {
    for (unsigned rep = 0; rep < r; ++rep) {
      for (unsigned d = s; d <= m; ++d) coeff[d] += coeff[d - s];
    }
  }
  return coeff[m];
}

std::vector<GradedPiece> graded_dims(unsigned k, unsigned r, unsigned m) {
  if (k < 1 || r < 1) throw ParameterError("need k, r >= 1");
  std::vector<GradedPiece> out;
  std::vector<unsigned> ell(k, 0);
  // Depth-first over l_1, ..., l_k with the remaining weight budget.
  auto recurse = [&](auto&& self, unsigned s, unsigned remaining) -> void {
    if (s == k) {
      if (remaining != 0) return;
      BigInt dim = 1;
      for (auto l : ell) dim *= binomial(l + r - 1, r - 1);
      out.push_back({ell, dim});
      return;
    }
    const unsigned weight = s + 1;
    for (unsigned l = 0; l * weight <= remaining; ++l) {
      ell[s] = l;
      self(self, s + 1, remaining - l * weight);
    }
    ell[s] = 0;
  };
  recurse(recurse, 0, m);
  return out;
}

BigInt lcm_weights(unsigned k) {
  if (k < 1) throw ParameterError("need k >= 1");
  return lcm_range(k);
}

Rational wp_volume(const std::vector<long>& a) {
  BigInt den = 1;
  for (auto w : a) {
    if (w <= 0) throw ParameterError("weights must be positive");
    den *= w;
  }
  return Rational(BigInt(1), den);
}

Rational wp_volume_r(const std::vector<long>& a, const std::vector<unsigned>& r) {
  if (a.size() != r.size()) throw ParameterError("weights and multiplicities differ in length");
  BigInt den = 1;
  for (std::size_t s = 0; s < a.size(); ++s) {
    if (a[s] <= 0) throw ParameterError("weights must be positive");
    den *= pow(BigInt(a[s]), r[s]);
  }
  return Rational(BigInt(1), den);
}

Rational simplex_moment(const std::vector<unsigned>& e) {
  if (e.empty()) throw ParameterError("simplex moment needs k >= 1");
  BigInt num = 1;
  unsigned long total = e.size() - 1;
  for (auto x : e) {
    num *= factorial(x);
    total += x;
  }
  Rational q(num, factorial(total));
  q.canonicalize();
  return q;
}

Rational nu_moment(unsigned k, unsigned r, const std::vector<unsigned>& m) {
  if (k < 1 || r < 1) throw ParameterError("need k, r >= 1");
  if (m.size() > k) throw ParameterError("more exponents than simplex coordinates");
  std::vector<unsigned> shifted(k, r - 1);
  for (std::size_t s = 0; s < m.size(); ++s) shifted[s] += m[s];
  Rational norm(factorial(static_cast<unsigned long>(k) * r - 1), pow(factorial(r - 1), k));
  norm.canonicalize();
  return norm * simplex_moment(shifted);
}

}  // namespace jetdiff
