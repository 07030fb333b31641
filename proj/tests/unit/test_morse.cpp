#include "jetdiff/morse.hpp"

#include "generators.hpp"

#include <gtest/gtest.h>

using namespace jetdiff;

namespace {

// Integral of a polynomial in x_0..x_{k-1} over the simplex.
Rational integrate_simplex(const Polynomial& p, unsigned k) {
  Rational total = 0;
  for (const auto& [mono, c] : p.terms()) {
    std::vector<unsigned> e(k);
    for (unsigned s = 0; s < k; ++s) e[s] = mono.exponent(s);
    total += c * gen::simplex_oracle(e);
  }
  return total;
}

// Integral against the measure proportional to (x_1 ... x_k)^{r-1}, with the
// normalization itself obtained by integration.
Rational integrate_nu(const Polynomial& p, unsigned k, unsigned r) {
  Polynomial density = 1L;
  for (unsigned s = 0; s < k; ++s) density *= Polynomial::variable(s).pow(r - 1);
  return integrate_simplex(p * density, k) / integrate_simplex(density, k);
}

Rational c_oracle(unsigned n, unsigned r, unsigned k) {
  Rational e = 0;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    if (static_cast<unsigned>(__builtin_popcount(mask)) != n) continue;
    Rational t = 1;
    for (unsigned s = 0; s < k; ++s) {
      if (mask & (1u << s)) t /= s + 1;
    }
    e += t;
  }
  Polynomial mono = 1L;
  for (unsigned s = 0; s < n; ++s) mono *= Polynomial::variable(s);
  return Rational(factorial(n)) / Rational(pow(BigInt(r), n)) * e * integrate_nu(mono, k, r);
}

Rational c_prime_oracle(unsigned n, unsigned r, unsigned k) {
  Polynomial lin;
  for (unsigned s = 0; s < k; ++s) lin += make_rational(1, s + 1) * Polynomial::variable(s);
  return make_rational(n, k * r) * harmonic(k) * integrate_nu(lin.pow(n - 1), k, r);
}

}  // namespace

TEST(Harmonic, Examples) {
  EXPECT_EQ(harmonic(1), 1);
  EXPECT_EQ(harmonic(2), make_rational(3, 2));
  EXPECT_EQ(harmonic(3), make_rational(11, 6));
}

TEST(ElementaryRecipSum, Examples) {
  EXPECT_EQ(elementary_recip_sum(2, 2), make_rational(1, 2));
  EXPECT_EQ(elementary_recip_sum(3, 3), make_rational(1, 6));
  EXPECT_EQ(elementary_recip_sum(1, 3), harmonic(3));
  EXPECT_EQ(elementary_recip_sum(4, 3), 0);
}

TEST(MorseConstants, TwoTwoTwoMatchesPublished) {
  const auto m = morse_constants(2, 2, 2);
  EXPECT_EQ(m.c, make_rational(1, 20));
  EXPECT_EQ(m.c_prime, make_rational(9, 16));
  EXPECT_EQ(m.ratio(), make_rational(45, 4));
  const auto pub = published_morse_constants(2, 2, 2);
  ASSERT_TRUE(pub.has_value());
  EXPECT_EQ(pub->ratio(), m.ratio());
}

TEST(MorseConstants, ThreeThreeThreeFromTheDefinition) {
  // c agrees with the published 1/990. The defining integral gives
  // c' = 1133/4860, not the published 451/4860 (ratio 4961/54).
  const auto m = morse_constants(3, 3, 3);
  EXPECT_EQ(m.c, make_rational(1, 990));
  EXPECT_EQ(m.c_prime, make_rational(1133, 4860));
  EXPECT_EQ(m.ratio(), make_rational(12463, 54));
  EXPECT_EQ(m.c_prime, c_prime_oracle(3, 3, 3));
  const auto pub = published_morse_constants(3, 3, 3);
  ASSERT_TRUE(pub.has_value());
  EXPECT_EQ(pub->c, m.c);
  EXPECT_EQ(pub->c_prime, make_rational(451, 4860));
  EXPECT_EQ(pub->ratio(), make_rational(4961, 54));
  EXPECT_FALSE(published_morse_constants(4, 4, 4).has_value());
}

TEST(MorseConstants, DefinitionAndClosedFormAgree) {
  for (unsigned k = 1; k <= 5; ++k) {
    for (unsigned n = 1; n <= k; ++n) {
      for (unsigned r = 1; r <= 5; ++r) {
        const Rational closed = morse_c_closed_form(n, r, k);
        EXPECT_EQ(morse_c_by_definition(n, r, k), closed) << n << r << k;
        const Rational floor_value = Rational(factorial(k * r - 1)) / Rational(factorial(n + k * r - 1));
        EXPECT_GE(closed, floor_value);
        EXPECT_EQ(closed == floor_value, k == n);
      }
    }
  }
}

TEST(MorseConstants, MatchIntegrationOracle) {
  for (unsigned k = 1; k <= 4; ++k) {
    for (unsigned n = 1; n <= k; ++n) {
      for (unsigned r = 1; r <= 3; ++r) {
        EXPECT_EQ(morse_c_by_definition(n, r, k), c_oracle(n, r, k)) << n << r << k;
        EXPECT_EQ(morse_c_prime(n, r, k), c_prime_oracle(n, r, k)) << n << r << k;
      }
    }
  }
}

TEST(MorseConstants, PositivityAndGuard) {
  for (unsigned n = 1; n <= 5; ++n) {
    const auto m = morse_constants(n, n, n);
    EXPECT_GT(m.c, 0);
    EXPECT_GT(m.c_prime, 0);
  }
  EXPECT_EQ(morse_constants(3, 2, 2).c, 0);
  EXPECT_THROW(morse_constants(13, 13, 13), ResourceLimit);
  EXPECT_THROW(morse_constants(0, 1, 1), ParameterError);
}

TEST(RatioBounds, Examples) {
  const auto b2 = ratio_bounds(2);
  EXPECT_EQ(b2.exact_ratio, make_rational(45, 4));
  EXPECT_NEAR(b2.intermediate.mid_double(), 14.23, 0.01);
  EXPECT_TRUE(b2.intermediate_holds);
  EXPECT_NEAR(b2.log_natural.mid_double(), 5.59, 0.01);
  EXPECT_FALSE(b2.log_natural_holds);

  const auto b3 = ratio_bounds(3);
  EXPECT_NEAR(b3.intermediate.mid_double(), 600.7, 0.1);
  EXPECT_THROW(ratio_bounds(1), ParameterError);
}

TEST(RatioBounds, IntermediateBoundHolds) {
  for (unsigned n = 2; n <= 6; ++n) {
    const auto b = ratio_bounds(n, 60);
    EXPECT_TRUE(b.intermediate_holds) << n;
    const Interval exact = Interval::from_rational(b.exact_ratio, bits_for_digits(60));
    EXPECT_TRUE(exact.certainly_less(b.intermediate)) << n;
  }
}

TEST(IndexBracket, Examples) {
  EXPECT_EQ(index_bracket(5, 0, 3), 125);
  EXPECT_EQ(index_bracket(1, 1, 2), -1);
  EXPECT_EQ(index_bracket(3, 1, 3), 0);
  EXPECT_THROW(index_bracket(-1, 1, 2), ParameterError);
}

TEST(IndexBracket, AlternatingSumAtQOne) {
  // At q = 1 the sum is (-1)^1 (alpha^n - n alpha^{n-1} beta).
  gen::Gen g(71);
  for (int trial = 0; trial < 100; ++trial) {
    const Rational a = g.integer(0, 20), b = g.integer(0, 20);
    const unsigned n = static_cast<unsigned>(g.integer(1, 6));
    EXPECT_EQ(index_alternating_sum(a, b, n, 1), -index_bracket(a, b, n));
    EXPECT_EQ(index_alternating_sum(a, b, n, 0), pow(a, n));
    // Full sum over j <= n is (-1)^n (alpha - beta)^n.
    const Rational full = index_alternating_sum(a, b, n, n);
    EXPECT_EQ(full, pow(b - a, n));
  }
}

TEST(GglMinDegree, TwoMatchesTable) {
  const auto cert = ggl_min_degree(2);
  EXPECT_EQ(cert.p, make_rational(64, 3));
  EXPECT_EQ(cert.threshold, 285);
  EXPECT_EQ(cert.d_min, 286);
}

TEST(GglMinDegree, ThreeWithPublishedRatio) {
  const auto cert = ggl_min_degree(3, {RatioSource::Published, PChoice::Infimum});
  EXPECT_EQ(cert.p, make_rational(810, 11));
  EXPECT_EQ(cert.d_min, 7316);
}

TEST(GglMinDegree, ThreeWithComputedRatio) {
  const auto cert = ggl_min_degree(3);
  const Rational threshold = make_rational(12463, 54) * (make_rational(810, 11) + 6) - 1;
  EXPECT_EQ(cert.threshold, threshold);
  EXPECT_EQ(cert.d_min, floor(threshold) + 1);
  EXPECT_NE(cert.d_min, 7316);
}

TEST(GglMinDegree, StrictlyIncreasingAndQuarticChoice) {
  BigInt prev = 0;
  for (unsigned n = 2; n <= 6; ++n) {
    const auto cert = ggl_min_degree(n);
    EXPECT_GT(cert.d_min, prev) << n;
    EXPECT_GT(Rational(cert.d_min), cert.threshold);
    EXPECT_LE(Rational(cert.d_min - 1), cert.threshold);
    prev = cert.d_min;
  }
  EXPECT_THROW(ggl_min_degree(2, {RatioSource::Computed, PChoice::QuarticMinus}), ParameterError);
  const auto q = ggl_min_degree(3, {RatioSource::Computed, PChoice::QuarticMinus});
  EXPECT_EQ(q.p, 75);
  EXPECT_THROW(ggl_min_degree(4, {RatioSource::Published, PChoice::Infimum}), ParameterError);
  EXPECT_THROW(ggl_min_degree(1), ParameterError);
}

TEST(GglBoundFormula, ConsistentWithLogBound) {
  EXPECT_THROW(ggl_bound_formula(3), ParameterError);
  for (unsigned n = 4; n <= 5; ++n) {
    const BigInt d = ggl_bound_formula(n, 60);
    const auto b = ratio_bounds(n, 60);
    const double threshold = b.log_natural.mid_double() * std::pow(double(n), 4);
    EXPECT_NEAR(d.get_d() / threshold, 1.0, 0.01) << n;
  }
}

TEST(EnumNames, RoundTrip) {
  EXPECT_EQ(to_string(RatioSource::Computed), "computed");
  EXPECT_EQ(to_string(RatioSource::Published), "published");
  EXPECT_EQ(to_string(PChoice::Infimum), "infimum");
  EXPECT_EQ(to_string(PChoice::QuarticMinus), "n^4-2n");
}
