#include "jetdiff/kobayashi.hpp"

#include <stdexcept>

namespace jetdiff {

namespace {

BigInt big(unsigned long x) { return BigInt(x); }

Interval q_interval(const Rational& x, mpfr_prec_t prec) { return Interval::from_rational(x, prec); }

}  // namespace

KobayashiParams standard_params(unsigned long n, std::optional<unsigned long> r) {
  if (n < 1) throw ParameterError("need n >= 1");
  KobayashiParams p;
  p.n = n;
  p.c = n;
  p.N = n * (n + 1);
  p.k = n * n * n + n * n + 1;
  p.r = r.value_or(n * n + 1);
  if (p.r < 1 || p.r > p.k + 1) throw ParameterError("need 1 <= r <= k+1");
  p.b = binomial(p.N, p.c - 1);
  p.B = binomial(p.N + 1, p.c);
  return p;
}

bool check_1228(long c, long k, long N, long n) {
  const BigInt lhs = (BigInt(c) + 1) * (BigInt(c) + 1 + k - N);
  const BigInt rhs = BigInt(n) + 1 + BigInt(k) * n;
  return lhs > rhs;
}

unsigned long minimal_k(long n, long c, long N) {
  // Linear in k: (c+1-n) k > n+1 - (c+1)(c+1-N).
  const BigInt slope = BigInt(c) + 1 - n;
  const BigInt rhs = BigInt(n) + 1 - (BigInt(c) + 1) * (BigInt(c) + 1 - N);
  if (slope > 0) {
    Rational bound(rhs, slope);
    bound.canonicalize();
    BigInt k = floor(bound) + 1;
    if (k < 1) k = 1;
    if (!k.fits_ulong_p()) throw ResourceLimit("minimal k does not fit a machine word");
    return k.get_ui();
  }
  if (slope * 1 > rhs) return 1;
  throw ParameterError("condition (c+1)(c+1+k-N) > n+1+kn is unsatisfiable for these c, N");
}

DegreeSplit degree_split(const BigInt& d, const BigInt& b, const BigInt& k) {
  if (d <= k) throw ParameterError("need d > k");
  if (b < 1) throw ParameterError("need b >= 1");
  DegreeSplit s;
  mpz_fdiv_qr(s.delta.get_mpz_t(), s.lambda.get_mpz_t(), BigInt(d - k).get_mpz_t(),
              b.get_mpz_t());
  s.rho = s.lambda + k;
  return s;
}

BigInt p_exponent(const BigInt& delta, const BigInt& k, const BigInt& r, const BigInt& b,
                  const BigInt& rho) {
  return delta - k - r * (k * (b - 2) + rho) - 2 * k * (k + 1);
}

DivisibilityExponents divisibility_exponents(const BigInt& d, const BigInt& k, const BigInt& r,
                                             const BigInt& b, const BigInt& rho,
                                             const BigInt& delta) {
  if (delta < k) throw ParameterError("need delta >= k");
  if (r > k + 1) throw ParameterError("need r <= k+1");
  DivisibilityExponents e;
  e.alpha = r * (d - rho - k * b);
  e.beta = (k + 1 - r) * (d - 2 * k);
  e.gamma = delta - k;
  e.sum = e.alpha + e.beta + e.gamma;
  e.closed_form = (k + 1) * (d - 2 * k) - r * (k * (b - 2) + rho) + delta - k;
  if (e.sum != e.closed_form) throw std::logic_error("divisibility exponent sum mismatch");
  return e;
}

BigInt kobayashi_degree(const KobayashiParams& p) {
  const BigInt k = big(p.k);
  return k + (p.b + 1) * (big(p.r) * (k * (p.b - 1) + p.b) + k * (2 * k + 3));
}

KobayashiParams with_degree(KobayashiParams params, const BigInt& d) {
  const DegreeSplit s = degree_split(d, params.b, big(params.k));
  params.d = d;
  params.delta = s.delta;
  params.lambda = s.lambda;
  params.rho = s.rho;
  params.p = p_exponent(s.delta, big(params.k), big(params.r), params.b, s.rho);
  return params;
}

bool BoundReport::all_passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

BigInt bound_half_power(unsigned long n, unsigned digits) {
  if (n < 1) throw ParameterError("need n >= 1");
  const mpfr_prec_t prec = bits_for_digits(digits);
  const Interval en = Interval::euler(prec) * q_interval(Rational(n), prec);
  const Interval factor = q_interval(Rational(BigInt(2 * n + 3), BigInt(2)), prec);
  const Interval two_pi = q_interval(Rational(2), prec) * Interval::pi(prec);
  return (factor * en.pow(2 * n + 1) / two_pi).floor();
}

BigInt bound_fifth(unsigned long n, unsigned digits) {
  if (n < 1) throw ParameterError("need n >= 1");
  const mpfr_prec_t prec = bits_for_digits(digits);
  const Interval en = Interval::euler(prec) * q_interval(Rational(n), prec);
  return (en.pow(2 * n + 2) / q_interval(Rational(5), prec)).floor();
}

BoundReport kobayashi_bound(unsigned long n, unsigned digits, std::optional<unsigned long> r) {
  BoundReport rep;
  rep.n = n;
  const KobayashiParams base = standard_params(n, r);
  rep.d_n = kobayashi_degree(base);
  rep.params = with_degree(base, rep.d_n);
  rep.bound_half_power = bound_half_power(n, digits);
  rep.bound_fifth = bound_fifth(n, digits);
  if (n == 1) rep.d_adjunction = BigInt(5);

  const auto& p = rep.params;
  const BigInt k = big(p.k);
  rep.checks.push_back({"p_positive", p.p > 0, "p = " + to_string(p.p)});
  rep.checks.push_back({"inequality_k", check_1228(static_cast<long>(p.c), static_cast<long>(p.k),
                                                   static_cast<long>(p.N), static_cast<long>(n)),
                        "(c+1)(c+1+k-N) > n+1+kn"});
  rep.checks.push_back({"k_minimal",
                        minimal_k(static_cast<long>(n), static_cast<long>(p.c),
                                  static_cast<long>(p.N)) == p.k,
                        "k = n^3+n^2+1 is the least admissible k"});
  const SmoothnessChecks sm = smoothness_checks(p.N, p.c, n);
  rep.checks.push_back({"smoothness", sm.n_bound && sm.codim_bound, "N >= c(n+1)"});
  rep.checks.push_back({"rho_ge_k", p.rho >= k, "rho = lambda + k >= k"});
  Rational quotient(rep.d_n - k, p.b + 1);
  quotient.canonicalize();
  rep.checks.push_back({"delta_gt_quotient", Rational(p.delta) > quotient, "delta > (d-k)/(b+1)"});
  if (p.delta >= k && big(p.r) <= k + 1) {
    const auto e = divisibility_exponents(rep.d_n, k, big(p.r), p.b, p.rho, p.delta);
    rep.checks.push_back({"divisibility_sum", e.sum == e.closed_form, "sum = " + to_string(e.sum)});
  }
  const std::string scope = n >= 4 ? "" : "bound stated for n >= 4; recorded only";
  rep.checks.push_back({"d_n_le_half_power", rep.d_n <= rep.bound_half_power, scope});
  rep.checks.push_back({"d_n_le_fifth", rep.d_n <= rep.bound_fifth, scope});
  return rep;
}

SmoothnessChecks smoothness_checks(unsigned long N, unsigned long c, unsigned long n) {
  if (c < 1) throw ParameterError("need c >= 1");
  SmoothnessChecks s;
  s.n_bound = N >= c * (n + 1);
  const unsigned long ceil_q = (N + 1 + c - 1) / c;
  s.codim_bound = ceil_q >= n + 2;
  s.equivalent = s.n_bound == s.codim_bound;
  return s;
}

StirlingCheck stirling_b_bound(unsigned long n, unsigned digits) {
  if (n < 1) throw ParameterError("need n >= 1");
  const mpfr_prec_t prec = bits_for_digits(digits);
  const BigInt b = binomial(n * n + n, n - 1);
  // e^{n + 1/2 + 1/(2n)} n^{n - 3/2} / sqrt(2 pi), with n^{-3/2} = 1/(n sqrt n).
  const Rational exponent = Rational(n) + Rational(1, 2) + Rational(BigInt(1), BigInt(2 * n));
  const Interval nn = q_interval(Rational(n), prec);
  const Interval two_pi = q_interval(Rational(2), prec) * Interval::pi(prec);
  const Interval bound =
      q_interval(exponent, prec).exp() * nn.pow(n) / (nn * nn.sqrt()) / two_pi.sqrt();
  const bool ok = Interval::from_integer(b, prec).certainly_less(bound);
  return StirlingCheck{b, bound, ok};
}

}  // namespace jetdiff
