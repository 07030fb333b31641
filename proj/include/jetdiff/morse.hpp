#pragma once

#include "jetdiff/interval.hpp"
#include "jetdiff/rational.hpp"

#include <optional>
#include <string>

namespace jetdiff {

/// 1 + 1/2 + ... + 1/k.
Rational harmonic(unsigned k);

/// e_n(1, 1/2, ..., 1/k) = sum over s_1 < ... < s_n of 1/(s_1 ... s_n);
/// zero when n > k.
Rational elementary_recip_sum(unsigned n, unsigned k);

struct MorseConstants {
  unsigned n = 0;
  unsigned r = 0;
  unsigned k = 0;
  Rational c;
  Rational c_prime;

  /// c'/c; throws ParameterError when c = 0 (k < n).
  Rational ratio() const;
};

/// Largest n or k accepted by morse_constants.
inline constexpr unsigned kMaxMorseParam = 12;

/// c from its integral definition (n!/r^n) e_n(1..1/k) int x_1...x_n dnu.
Rational morse_c_by_definition(unsigned n, unsigned r, unsigned k);
/// c = n!(kr-1)!/(n+kr-1)! e_n(1..1/k).
Rational morse_c_closed_form(unsigned n, unsigned r, unsigned k);
/// c' = (n/kr) H_k int (sum_s x_s/s)^{n-1} dnu, by multinomial expansion.
Rational morse_c_prime(unsigned n, unsigned r, unsigned k);

/// Both constants; the two routes to c are cross-checked on every call.
MorseConstants morse_constants(unsigned n, unsigned r, unsigned k);

/// The printed table of special values, for (2,2,2) and (3,3,3) only.
std::optional<MorseConstants> published_morse_constants(unsigned n, unsigned r, unsigned k);

struct RatioBounds {
  unsigned n;
  Rational exact_ratio;
  Interval intermediate;  // ((n^2+n-1)/3) n^{n-2} exp(2(n-1)/H_n + n ln H_n)
  Interval log_natural;   // (1/3)(n ln(n ln 24n))^n
  Interval log_base2;     // (1/3)(n log2(n log2 24n))^n
  bool intermediate_holds;
  bool log_natural_holds;
  bool log_base2_holds;
};

/// Exact c'/c at k = r = n against the closed-form upper bounds.
RatioBounds ratio_bounds(unsigned n, unsigned digits = kDefaultDigits);

/// alpha^n - n alpha^{n-1} beta, the q = 1 lower bound for 1_{<=1} eta^n
/// when eta = alpha - beta with alpha, beta multiples of one positive form.
Rational index_bracket(const Rational& alpha, const Rational& beta, unsigned n);

/// sum_{0<=j<=q} (-1)^{q-j} C(n,j) alpha^{n-j} beta^j, the scalar form of
/// the upper bound for (-1)^q 1_{<=q} eta^n.
Rational index_alternating_sum(const Rational& alpha, const Rational& beta, unsigned n,
                               unsigned q);

enum class RatioSource { Computed, Published };
enum class PChoice { Infimum, QuarticMinus };  // p* or p = n^4 - 2n

struct GglOptions {
  RatioSource ratio = RatioSource::Computed;
  PChoice p = PChoice::Infimum;
};

struct GglCertificate {
  unsigned n = 0;
  Rational ratio;
  Rational p;
  Rational threshold;  // ratio (p + 2n) - (n - 2)
  BigInt d_min;        // least integer d > threshold
  GglOptions options;
};

/// Least degree d with d + n - 2 > ratio (p + 2n), where p is the infimum
/// p* = n^2 (n^2 + 2n)/H_n of the ampleness condition or p = n^4 - 2n.
GglCertificate ggl_min_degree(unsigned n, GglOptions options = {});

/// floor((n^4/3)(n ln(n ln 24n))^n) for n >= 4, certified by interval
/// arithmetic; FloorAmbiguous when the enclosure straddles an integer.
BigInt ggl_bound_formula(unsigned n, unsigned digits = kDefaultDigits);

std::string to_string(RatioSource s);
std::string to_string(PChoice p);

}  // namespace jetdiff
