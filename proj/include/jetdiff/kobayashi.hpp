#pragma once

#include "jetdiff/interval.hpp"
#include "jetdiff/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace jetdiff {

/// Parameters of the Wronskian construction for hypersurfaces of degree d in
/// an (n+1)-fold. The degree-dependent fields are filled by with_degree.
struct KobayashiParams {
  unsigned long n = 0;
  unsigned long c = 0;
  unsigned long N = 0;
  unsigned long k = 0;
  unsigned long r = 0;
  BigInt b;  // C(N, c-1)
  BigInt B;  // C(N+1, c)
  std::optional<BigInt> d;
  BigInt delta;
  BigInt lambda;
  BigInt rho;
  BigInt p;

  /// k' = k(k+1)/2, the weighted degree of W_k.
  unsigned long k_prime() const { return k * (k + 1) / 2; }
};

/// c = n, N = n(n+1), k = n^3+n^2+1, b = C(n^2+n, n-1), B = C(n^2+n+1, n),
/// r = n^2+1 unless overridden.
KobayashiParams standard_params(unsigned long n, std::optional<unsigned long> r = std::nullopt);

/// (c+1)(c+1+k-N) > n+1+kn.
bool check_1228(long c, long k, long N, long n);

/// Least k >= 1 with check_1228(c, k, N, n); ParameterError if none exists.
unsigned long minimal_k(long n, long c, long N);

struct DegreeSplit {
  BigInt delta;
  BigInt lambda;
  BigInt rho;
};

/// d - k = b delta + lambda with 0 <= lambda < b, rho = lambda + k.
DegreeSplit degree_split(const BigInt& d, const BigInt& b, const BigInt& k);

/// p = delta - k - r(k(b-2) + rho) - 2k(k+1).
BigInt p_exponent(const BigInt& delta, const BigInt& k, const BigInt& r, const BigInt& b,
                  const BigInt& rho);

struct DivisibilityExponents {
  BigInt alpha;  // r(d - rho - kb)
  BigInt beta;   // (k+1-r)(d-2k)
  BigInt gamma;  // delta - k
  BigInt sum;
  BigInt closed_form;  // (k+1)(d-2k) - r(k(b-2)+rho) + delta - k
};

/// Requires delta >= k and r <= k+1; throws std::logic_error if the sum
/// differs from the closed form.
DivisibilityExponents divisibility_exponents(const BigInt& d, const BigInt& k, const BigInt& r,
                                             const BigInt& b, const BigInt& rho,
                                             const BigInt& delta);

/// k + (b+1)(r(k(b-1)+b) + k(2k+3)).
BigInt kobayashi_degree(const KobayashiParams& params);

/// Fills the degree-dependent fields of params.
KobayashiParams with_degree(KobayashiParams params, const BigInt& d);

struct NamedCheck {
  std::string name;
  bool passed = false;
  std::string note;
};

struct BoundReport {
  unsigned long n = 0;
  KobayashiParams params;
  BigInt d_n;
  BigInt bound_half_power;  // floor((n+3/2)(en)^{2n+1}/2pi)
  BigInt bound_fifth;       // floor((en)^{2n+2}/5)
  std::optional<BigInt> d_adjunction;  // 5 for n = 1
  std::vector<NamedCheck> checks;

  bool all_passed() const;
};

BoundReport kobayashi_bound(unsigned long n, unsigned digits = kDefaultDigits,
                            std::optional<unsigned long> r = std::nullopt);

/// floor((n+3/2)(en)^{2n+1}/2pi) and floor((en)^{2n+2}/5).
BigInt bound_half_power(unsigned long n, unsigned digits = kDefaultDigits);
BigInt bound_fifth(unsigned long n, unsigned digits = kDefaultDigits);

struct SmoothnessChecks {
  bool n_bound = false;      // N >= c(n+1)
  bool codim_bound = false;  // ceil((N+1)/c) >= n+2
  bool equivalent = false;   // the two agree
};

SmoothnessChecks smoothness_checks(unsigned long N, unsigned long c, unsigned long n);

struct StirlingCheck {
  BigInt b;
  Interval bound;  // e^{n+1/2+1/2n} n^{n-3/2} / sqrt(2pi)
  bool ok;
};

StirlingCheck stirling_b_bound(unsigned long n, unsigned digits = kDefaultDigits);

}  // namespace jetdiff
