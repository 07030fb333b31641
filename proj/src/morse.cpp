#include "jetdiff/morse.hpp"

#include "jetdiff/dims.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

namespace jetdiff {

namespace {

void check_params(unsigned n, unsigned r, unsigned k) {
  if (n < 1 || r < 1 || k < 1) throw ParameterError("need n, r, k >= 1");
  if (n > kMaxMorseParam || k > kMaxMorseParam) {
    throw ResourceLimit("Morse constants limited to n, k <= " + std::to_string(kMaxMorseParam));
  }
}

Rational frac(const BigInt& num, const BigInt& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

Rational harmonic(unsigned k) {
  if (k < 1) throw ParameterError("need k >= 1");
  Rational h = 0;
  for (unsigned s = 1; s <= k; ++s) h += Rational(1, s);
  return h;
}

Rational elementary_recip_sum(unsigned n, unsigned k) {
  if (n > k) return 0;
  // e_j over the first s reciprocals, updated one reciprocal at a time.
  std::vector<Rational> e(n + 1, Rational(0));
  e[0] = 1;
  for (unsigned s = 1; s <= k; ++s) {
    const Rational x(1, s);
    for (unsigned j = std::min(n, s); j >= 1; --j) e[j] += e[j - 1] * x;
  }
  return e[n];
}

Rational MorseConstants::ratio() const {
  if (c == 0) throw ParameterError("c vanishes for k < n; the ratio is undefined");
  return c_prime / c;
}

Rational morse_c_by_definition(unsigned n, unsigned r, unsigned k) {
  check_params(n, r, k);
  if (k < n) return 0;
  const std::vector<unsigned> ones(n, 1);
  return frac(factorial(n), pow(BigInt(r), n)) * elementary_recip_sum(n, k) *
         nu_moment(k, r, ones);
}

Rational morse_c_closed_form(unsigned n, unsigned r, unsigned k) {
  check_params(n, r, k);
  const unsigned long kr = static_cast<unsigned long>(k) * r;
  return frac(factorial(n) * factorial(kr - 1), factorial(n + kr - 1)) *
         elementary_recip_sum(n, k);
}

Rational morse_c_prime(unsigned n, unsigned r, unsigned k) {
  check_params(n, r, k);
  const unsigned power = n - 1;
  // (sum_s x_s/s)^{n-1} = sum over compositions m of n-1 into k parts of
  // (n-1)!/prod m_s! prod (x_s/s)^{m_s}.
  Rational integral = 0;
  std::vector<unsigned> m(k, 0);
  const BigInt top = factorial(power);
  auto recurse = [&](auto&& self, unsigned s, unsigned remaining) -> void {
    if (s + 1 == k) {
      m[s] = remaining;
      BigInt den = 1;
      for (unsigned t = 0; t < k; ++t) {
        den *= factorial(m[t]);
        den *= pow(BigInt(t + 1), m[t]);
      }
      integral += frac(top, den) * nu_moment(k, r, m);
      return;
    }
    for (unsigned x = 0; x <= remaining; ++x) {
      m[s] = x;
      self(self, s + 1, remaining - x);
    }
  };
  recurse(recurse, 0, power);
  return frac(BigInt(n), BigInt(static_cast<unsigned long>(k) * r)) * harmonic(k) * integral;
}

MorseConstants morse_constants(unsigned n, unsigned r, unsigned k) {
  const Rational by_def = morse_c_by_definition(n, r, k);
  const Rational closed = morse_c_closed_form(n, r, k);
  if (by_def != closed) {
    throw std::logic_error("Morse constant c: definition " + to_string(by_def) +
                           " disagrees with closed form " + to_string(closed));
  }
  return MorseConstants{n, r, k, closed, morse_c_prime(n, r, k)};
}

std::optional<MorseConstants> published_morse_constants(unsigned n, unsigned r, unsigned k) {
  if (n == 2 && r == 2 && k == 2) {
    return MorseConstants{2, 2, 2, make_rational(1, 20), make_rational(9, 16)};
  }
  if (n == 3 && r == 3 && k == 3) {
    return MorseConstants{3, 3, 3, make_rational(1, 990), make_rational(451, 4860)};
  }
  return std::nullopt;
}

RatioBounds ratio_bounds(unsigned n, unsigned digits) {
  if (n < 2) throw ParameterError("ratio bounds need n >= 2");
  const mpfr_prec_t prec = bits_for_digits(digits);
  const Rational exact = morse_constants(n, n, n).ratio();
  const Rational h = harmonic(n);
  auto q = [prec](const Rational& x) { return Interval::from_rational(x, prec); };

  const Interval hn = q(h);
  const Interval exponent = q(Rational(2 * (n - 1))) / hn + q(Rational(n)) * hn.log();
  const Interval intermediate =
      q(frac(BigInt(n * n + n - 1), BigInt(3))) * q(Rational(n)).pow(n - 2) * exponent.exp();

  const Interval nn = q(Rational(n));
  const Interval third = q(make_rational(1, 3));
  const Interval inner_e = (nn * (q(Rational(24 * n)).log())).log();
  const Interval log_natural = third * (nn * inner_e).pow(n);
  const Interval inner_2 = (nn * (q(Rational(24 * n)).log2())).log2();
  const Interval log_base2 = third * (nn * inner_2).pow(n);

  const Interval ex = q(exact);
  return RatioBounds{n,
                     exact,
                     intermediate,
                     log_natural,
                     log_base2,
                     ex.certainly_less(intermediate),
                     ex.certainly_less(log_natural),
                     ex.certainly_less(log_base2)};
}

Rational index_bracket(const Rational& alpha, const Rational& beta, unsigned n) {
  if (alpha < 0 || beta < 0) throw ParameterError("need alpha, beta >= 0");
  if (n < 1) throw ParameterError("need n >= 1");
  return pow(alpha, n) - Rational(n) * pow(alpha, n - 1) * beta;
}

Rational index_alternating_sum(const Rational& alpha, const Rational& beta, unsigned n,
                               unsigned q) {
  if (alpha < 0 || beta < 0) throw ParameterError("need alpha, beta >= 0");
  Rational total = 0;
  for (unsigned j = 0; j <= q && j <= n; ++j) {
    Rational t = Rational(binomial(n, j)) * pow(alpha, n - j) * pow(beta, j);
    total += ((q - j) % 2 == 0) ? t : Rational(-t);
  }
  return total;
}

GglCertificate ggl_min_degree(unsigned n, GglOptions options) {
  if (n < 2) throw ParameterError("the GGL degree bound needs n >= 2");
  GglCertificate cert;
  cert.n = n;
  cert.options = options;
  if (options.ratio == RatioSource::Published) {
    const auto pub = published_morse_constants(n, n, n);
    if (!pub) throw ParameterError("no published Morse constants for n = " + std::to_string(n));
    cert.ratio = pub->ratio();
  } else {
    cert.ratio = morse_constants(n, n, n).ratio();
  }
  const Rational n2(n * n);
  const Rational p_star = n2 * (n2 + 2 * n) / harmonic(n);
  if (options.p == PChoice::Infimum) {
    cert.p = p_star;
  } else {
    cert.p = Rational(pow(BigInt(n), 4) - 2 * n);
    if (!(cert.p > p_star)) {
      throw ParameterError("p = n^4 - 2n = " + to_string(cert.p) +
                           " fails the ampleness condition for n = " + std::to_string(n));
    }
  }
  cert.threshold = cert.ratio * (cert.p + 2 * n) - Rational(n) + 2;
  cert.d_min = floor(cert.threshold) + 1;
  return cert;
}

BigInt ggl_bound_formula(unsigned n, unsigned digits) {
  if (n < 4) throw ParameterError("the closed-form GGL bound is stated for n >= 4");
  const mpfr_prec_t prec = bits_for_digits(digits);
  auto q = [prec](const Rational& x) { return Interval::from_rational(x, prec); };
  const Interval nn = q(Rational(n));
  const Interval inner = (nn * q(Rational(24 * n)).log()).log();
  const Interval value = q(frac(pow(BigInt(n), 4), BigInt(3))) * (nn * inner).pow(n);
  return value.floor();
}

std::string to_string(RatioSource s) {
  return s == RatioSource::Computed ? "computed" : "published";
}

std::string to_string(PChoice p) { return p == PChoice::Infimum ? "infimum" : "n^4-2n"; }

}  // namespace jetdiff
