#include "jetdiff/semple.hpp"

#include "generators.hpp"

#include <gtest/gtest.h>

using namespace jetdiff;

namespace {

WeightVector W(std::initializer_list<long> a) {
  WeightVector w;
  for (long x : a) w.emplace_back(x);
  return w;
}

}  // namespace

TEST(SempleDim, Examples) {
  EXPECT_EQ(semple_dim(2, 2, 3), 5u);
  EXPECT_EQ(semple_dim(3, 3, 2), 7u);
  for (unsigned k = 0; k < 6; ++k) EXPECT_EQ(semple_dim(4, 1, k), 4u);
  EXPECT_EQ(semple_rank(5, 3, 7), 3u);
  EXPECT_THROW(semple_dim(2, 3, 1), ParameterError);
  EXPECT_THROW(semple_dim(0, 0, 1), ParameterError);
}

TEST(WeightToB, Examples) {
  EXPECT_EQ(weight_to_b(W({6, 2, 1})), W({6, 8, 9}));
  EXPECT_EQ(weight_to_b(W({1, 0, 0, 0})), W({1, 1, 1, 1}));
  EXPECT_EQ(weight_to_b(W({1, -2, 1})), W({1, -1, 0}));
  EXPECT_FALSE(b_nonneg(weight_to_b(W({1, -2, 1}))));
  EXPECT_TRUE(b_nonneg(weight_to_b(W({6, 2, 1}))));
}

TEST(WeightToB, InvertedByFirstDifferences) {
  gen::Gen g(41);
  for (int trial = 0; trial < 100; ++trial) {
    WeightVector a;
    const auto k = g.integer(1, 6);
    for (long j = 0; j < k; ++j) a.push_back(g.rational());
    const auto b = weight_to_b(a);
    EXPECT_EQ(first_differences(b), a);
    Rational s = 0;
    for (const auto& x : a) s += x;
    EXPECT_EQ(b.back(), s);
  }
}

TEST(WeightCriteria, Examples) {
  EXPECT_TRUE(is_nef_weight(W({6, 2, 1}), 18));
  EXPECT_FALSE(is_ample_weight(W({6, 2, 1}), 18));
  // Only a_{k-1} > 2 a_k > 0 and p > 2 sum(a) are strict, so the boundary
  // a_1 = 3 a_2 is allowed and (9, 3, 1) with p = 27 > 26 is ample.
  EXPECT_TRUE(is_nef_weight(W({9, 3, 1}), 27));
  EXPECT_TRUE(is_ample_weight(W({9, 3, 1}), 27));
  EXPECT_FALSE(is_ample_weight(W({9, 3, 1}), 26));
  EXPECT_TRUE(is_nef_weight(W({0, 0, 0}), 0));
  EXPECT_FALSE(is_ample_weight(W({0, 0, 0}), 0));
  EXPECT_FALSE(is_nef_weight(W({8, 3, 1}), 27));
  EXPECT_TRUE(is_nef_weight(W({0}), 0));
  EXPECT_TRUE(is_ample_weight(W({1}), 3));
  EXPECT_FALSE(is_ample_weight(W({1}), 2));
  EXPECT_THROW(is_nef_weight(WeightVector{}, 0), ParameterError);
}

TEST(WeightCriteria, AmpleImpliesNef) {
  gen::Gen g(42);
  int ample = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    WeightVector a;
    const auto k = g.integer(1, 4);
    for (long j = 0; j < k; ++j) a.emplace_back(g.integer(0, 30));
    const Rational p = g.integer(0, 150);
    if (is_ample_weight(a, p)) {
      ++ample;
      EXPECT_TRUE(is_nef_weight(a, p));
    }
  }
  EXPECT_GT(ample, 0);
}

TEST(LkWeights, Examples) {
  EXPECT_EQ(lk_weight(3).weight, W({9, 3, 1}));
  EXPECT_EQ(lk_weight(3).p, 27);
  EXPECT_EQ(lk_prime_weight(2).weight, W({2, 1}));
  EXPECT_EQ(lk_prime_weight(2).p, 6);
  EXPECT_EQ(lk_prime_weight(3).weight, W({6, 2, 1}));
  EXPECT_EQ(lk_prime_weight(3).p, 18);
  EXPECT_THROW(lk_weight(0), ParameterError);
}

TEST(LkWeights, NefAndBoundary) {
  for (unsigned k = 1; k <= 8; ++k) {
    const auto l = lk_weight(k), lp = lk_prime_weight(k);
    EXPECT_TRUE(is_nef_weight(l.weight, l.p)) << k;
    EXPECT_TRUE(is_nef_weight(lp.weight, lp.p)) << k;
    for (unsigned j = 0; j + 1 < k; ++j) EXPECT_EQ(l.weight[j], 3 * l.weight[j + 1]);
  }
}

TEST(CanonicalTwist, Examples) {
  EXPECT_EQ(canonical_twist(1, 3).weight, W({0, 0, 0}));
  const auto c = canonical_twist(2, 3);
  EXPECT_EQ(c.weight, W({-1, -1, -1}));
  EXPECT_EQ(c.kv_mult, 1);
  EXPECT_EQ(c.base_twist, 0);
}

TEST(CanonicalTwist, OneStepInduction) {
  for (unsigned r = 1; r <= 4; ++r) {
    for (unsigned k = 1; k <= 6; ++k) {
      WeightVector last(k, Rational(0));
      last[k - 1] = -Rational(r - 1);
      EXPECT_EQ(canonical_twist(r, k), pullback(canonical_twist(r, k - 1)) + tautological(last));
    }
  }
}

TEST(GglTwist, Examples) {
  const auto t = ggl_twist(2, 3, 1);
  EXPECT_EQ(t.p, 12);
  EXPECT_EQ(t.cls.weight, W({6, 2, 1}));
  EXPECT_EQ(t.cls.kv_mult, 1);
  const Rational eps = make_rational(1, 5);
  const auto s = ggl_twist(3, 2, eps);
  EXPECT_EQ(s.p, 4 + eps * 3);
  EXPECT_EQ(s.cls.weight, (WeightVector{eps * 2, eps}));
  EXPECT_THROW(ggl_twist(2, 3, 0), ParameterError);
  // K_{V_k} + O((r-1) 1) is just pi^* K_V.
  const auto rest = canonical_twist(3, 4) + tautological(WeightVector(4, Rational(2)));
  EXPECT_EQ(rest, (TautologicalClass{WeightVector(4, Rational(0)), Rational(0), Rational(1)}));
}

TEST(TautologicalClass, AbelianGroupLaws) {
  gen::Gen g(43);
  auto random_class = [&g] {
    WeightVector w;
    for (int j = 0; j < 3; ++j) w.push_back(g.rational());
    return TautologicalClass{w, g.rational(), g.rational()};
  };
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_class(), b = random_class(), c = random_class();
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a - a, tautological(WeightVector(3, Rational(0))));
    EXPECT_EQ(-(-a), a);
  }
  EXPECT_THROW(canonical_twist(2, 2) + canonical_twist(2, 3), ParameterError);
}
