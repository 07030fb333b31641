#include "jetdiff/dims.hpp"

#include "generators.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace jetdiff;

namespace {

// Counts exponent tuples one by one.
std::map<std::vector<unsigned>, BigInt> brute_graded(unsigned k, unsigned r, unsigned m) {
  std::map<std::vector<unsigned>, BigInt> out;
  for (const auto& alpha : gen::Gen::exponents_of_degree(k, r, m)) {
    std::vector<unsigned> ell(k, 0);
    for (std::size_t slot = 0; slot < alpha.size(); ++slot) ell[slot / r] += alpha[slot];
    out[ell] += 1;
  }
  return out;
}

}  // namespace

TEST(EggDim, Examples) {
  EXPECT_EQ(egg_dim(2, 1, 3), 2);
  EXPECT_EQ(egg_dim(3, 4, 0), 1);
  for (unsigned r = 1; r <= 4; ++r) {
    for (unsigned m = 0; m <= 10; ++m) EXPECT_EQ(egg_dim(1, r, m), binomial(m + r - 1, r - 1));
  }
}

TEST(EggDim, MatchesBruteForceAndGradedSum) {
  for (unsigned k = 1; k <= 4; ++k) {
    for (unsigned r = 1; r <= 4; ++r) {
      for (unsigned m = 0; m <= 12; ++m) {
        BigInt sum = 0;
        for (const auto& piece : graded_dims(k, r, m)) sum += piece.dim;
        EXPECT_EQ(sum, egg_dim(k, r, m)) << k << " " << r << " " << m;
        if (k <= 3 && r <= 3 && m <= 8) {
          BigInt brute = 0;
          for (const auto& [ell, count] : brute_graded(k, r, m)) brute += count;
          EXPECT_EQ(brute, egg_dim(k, r, m));
        }
      }
    }
  }
}

TEST(EggDim, MonotoneInRAndK) {
  for (unsigned k = 1; k <= 5; ++k) {
    for (unsigned r = 1; r <= 5; ++r) {
      for (unsigned m = 0; m <= 10; ++m) {
        EXPECT_LE(egg_dim(k, r, m), egg_dim(k + 1, r, m));
        EXPECT_LE(egg_dim(k, r, m), egg_dim(k, r + 1, m));
      }
    }
  }
}

TEST(EggDim, LargeValuesStayExact) {
  // Polynomial growth m^{kr-1}: far beyond 64 bits here.
  EXPECT_GT(egg_dim(6, 6, 200), BigInt("18446744073709551616"));
}

TEST(GradedDims, Examples) {
  const auto a = graded_dims(2, 1, 3);
  ASSERT_EQ(a.size(), 2u);
  std::map<std::vector<unsigned>, BigInt> got;
  for (const auto& p : a) got[p.ell] = p.dim;
  EXPECT_EQ(got.at({3, 0}), 1);
  EXPECT_EQ(got.at({1, 1}), 1);

  got.clear();
  for (const auto& p : graded_dims(2, 2, 2)) got[p.ell] = p.dim;
  ASSERT_EQ(got.size(), 2u);
  EXPECT_EQ(got.at({2, 0}), 3);
  EXPECT_EQ(got.at({0, 1}), 2);

  const auto zero = graded_dims(3, 2, 0);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_EQ(zero[0].dim, 1);
}

TEST(GradedDims, MatchesBruteForcePieces) {
  for (unsigned k = 1; k <= 3; ++k) {
    for (unsigned r = 1; r <= 3; ++r) {
      for (unsigned m = 0; m <= 8; ++m) {
        std::map<std::vector<unsigned>, BigInt> got;
        for (const auto& p : graded_dims(k, r, m)) got[p.ell] = p.dim;
        EXPECT_EQ(got, brute_graded(k, r, m));
      }
    }
  }
}

TEST(LcmWeights, Examples) {
  EXPECT_EQ(lcm_weights(1), 1);
  EXPECT_EQ(lcm_weights(4), 12);
  EXPECT_EQ(lcm_weights(6), 60);
}

TEST(WpVolume, Examples) {
  EXPECT_EQ(wp_volume({1, 1, 1}), 1);
  EXPECT_EQ(wp_volume({1, 2, 3}), make_rational(1, 6));
  EXPECT_EQ(wp_volume_r({1, 2}, {2, 2}), make_rational(1, 4));
  EXPECT_THROW(wp_volume({1, 0}), ParameterError);
  EXPECT_THROW(wp_volume_r({1, 2}, {1}), ParameterError);
}

TEST(SimplexMoment, Examples) {
  EXPECT_EQ(simplex_moment({1, 1}), make_rational(1, 6));
  EXPECT_EQ(simplex_moment({0, 0, 0, 0}), make_rational(1, 6));
  EXPECT_EQ(simplex_moment({2, 0, 0}), make_rational(1, 12));
}

TEST(SimplexMoment, MatchesIteratedIntegration) {
  gen::Gen g(51);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<unsigned> e(static_cast<std::size_t>(g.integer(1, 4)));
    for (auto& x : e) x = static_cast<unsigned>(g.integer(0, 4));
    const Rational v = simplex_moment(e);
    EXPECT_GT(v, 0);
    EXPECT_EQ(v, gen::simplex_oracle(e));
  }
}

TEST(NuMoment, Examples) {
  EXPECT_EQ(nu_moment(3, 2, {}), 1);
  for (unsigned k = 1; k <= 5; ++k) {
    for (unsigned r = 1; r <= 3; ++r) {
      Rational sum = 0;
      for (unsigned s = 0; s < k; ++s) {
        std::vector<unsigned> m(k, 0);
        m[s] = 1;
        EXPECT_EQ(nu_moment(k, r, m), make_rational(1, k));
        sum += nu_moment(k, r, m);
      }
      EXPECT_EQ(sum, 1);
    }
  }
  EXPECT_EQ(nu_moment(2, 2, {1}), make_rational(1, 2));
}
