#include "jetdiff/jet_poly.hpp"
#include "jetdiff/serialize.hpp"

#include "generators.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace jetdiff;
using gen::derivatives_at_zero;
using gen::Gen;
using gen::taylor_polynomial;

namespace {

ScalarJet<Rational> J(std::initializer_list<Rational> d) { return ScalarJet<Rational>(std::vector<Rational>(d)); }

Polynomial z(std::size_t i) { return Polynomial::variable(i); }

// A curve jet tangent to the first r coordinates: the rest stay constant.
CurveJet<Rational> tangent_curve(Gen& g, unsigned n, unsigned r, unsigned order) {
  std::vector<ScalarJet<Rational>> comps;
  for (unsigned i = 0; i < n; ++i) {
    comps.push_back(i < r ? g.jet(order) : ScalarJet<Rational>::constant(g.rational(), order));
  }
  return CurveJet<Rational>(std::move(comps));
}

// d/dt P(f(t)) at t = 0, computed from Taylor polynomials of f in t.
Rational derivative_along(const JetPolynomial& p, const CurveJet<Rational>& f) {
  std::vector<Polynomial> curve;
  for (unsigned i = 0; i < p.n(); ++i) curve.push_back(taylor_polynomial(f[i]));
  Polynomial value;
  for (const auto& [alpha, c] : p.terms()) {
    Polynomial t = c.substitute(curve);
    for (unsigned s = 1; s <= p.k(); ++s) {
      for (unsigned i = 0; i < p.r(); ++i) {
        Polynomial d = curve[i];
        for (unsigned l = 0; l < s; ++l) d = d.derivative(0);
        t *= d.pow(alpha[(s - 1) * p.r() + i]);
      }
    }
    value += t;
  }
  return derivatives_at_zero(value, 1)[1];
}

Rational reparam_monomial(const Reparam<Rational>& phi, const ReparamExponent& a) {
  Rational v = 1;
  for (std::size_t s = 0; s < a.size(); ++s) v *= pow(phi.jet()[static_cast<unsigned>(s + 1)], a[s]);
  return v;
}

unsigned total(const ReparamExponent& a) { return std::accumulate(a.begin(), a.end(), 0u); }

}  // namespace

TEST(WeightedDegree, Examples) {
  EXPECT_EQ(weighted_degree(JetExponent{3, 0}, 2, 1), 3u);
  EXPECT_EQ(weighted_degree(JetExponent{1, 1}, 2, 1), 3u);
  EXPECT_EQ(weighted_degree(JetExponent{3, 1, 0, 0}, 2, 2), 4u);
  EXPECT_EQ(weighted_degree(JetExponent{0, 0, 2, 0}, 2, 2), 4u);
  EXPECT_EQ(weighted_degree(ReparamExponent{0, 1}), 2u);
}

TEST(JetPolynomial, RejectsMalformedTermsAndDropsZeros) {
  JetPolynomial p(2, 1, 1);
  EXPECT_THROW(p.add_term(JetExponent{1}, Polynomial(1L)), ParameterError);
  p.add_term(JetExponent{1, 0}, Polynomial(2L));
  p.add_term(JetExponent{1, 0}, Polynomial(-2L));
  EXPECT_TRUE(p.is_zero());
  EXPECT_THROW(JetPolynomial(0, 1, 1), ParameterError);
  EXPECT_THROW(JetPolynomial(1, 3, 2), ParameterError);
}

TEST(JetPolynomial, FlatRoundTripAndJson) {
  Gen g(31);
  for (int trial = 0; trial < 30; ++trial) {
    const auto p = g.homogeneous(3, 2, 3, static_cast<unsigned>(g.integer(1, 5)), 4, 2);
    EXPECT_EQ(JetPolynomial::from_flat(p.to_flat(), 3, 2, 3), p);
    EXPECT_EQ(jet_polynomial_from_json(jet_polynomial_to_json(p)), p);
  }
}

TEST(Evaluate, Examples) {
  const auto fp = JetPolynomial::monomial(1, 1, 1, {1});
  EXPECT_EQ(evaluate(fp, CurveJet<Rational>({ScalarJet<Rational>::identity(1)})), 1);
  const auto cube = JetPolynomial::monomial(1, 1, 1, {3});
  EXPECT_EQ(evaluate(cube, CurveJet<Rational>({J({0, 2})})), 8);

  JetPolynomial q(2, 2, 2);
  q.add_term({3, 1, 0, 0}, z(0));
  q.add_term({0, 0, 2, 0}, z(1));
  const CurveJet<Rational> f({J({0, 1, 0}), J({0, 0, 2})});
  EXPECT_EQ(evaluate(q, f), 0);
  EXPECT_THROW(evaluate(q, CurveJet<Rational>({J({0, 1})})), ParameterError);
  EXPECT_THROW(evaluate(q, CurveJet<Rational>({J({0, 1}), J({0, 1})})), ParameterError);
}

TEST(Pullback, Examples) {
  Gen g(32);
  const auto p = g.homogeneous(2, 2, 2, 3, 5, 1);
  EXPECT_EQ(gk_pullback(p, Reparam<Rational>::identity(2)), p);
  const Rational lambda = make_rational(-3, 2);
  EXPECT_EQ(gk_pullback(p, Reparam<Rational>::homothety(lambda, 2)), pow(lambda, 3) * p);

  const Rational c = make_rational(5, 7);
  const auto second = JetPolynomial::monomial(2, 1, 1, {0, 1});
  const auto expected = second + c * JetPolynomial::monomial(2, 1, 1, {1, 0});
  EXPECT_EQ(gk_pullback(second, Reparam<Rational>(J({0, 1, c}))), expected);
  EXPECT_THROW(gk_pullback(second, Reparam<Rational>(J({0, 1}))), ParameterError);
}

TEST(Pullback, MatchesEvaluationOfComposedJet) {
  Gen g(33);
  for (int trial = 0; trial < 50; ++trial) {
    const unsigned k = static_cast<unsigned>(g.integer(1, 3)), r = static_cast<unsigned>(g.integer(1, 2));
    const unsigned n = r + static_cast<unsigned>(g.integer(0, 1));
    const auto p = g.homogeneous(k, r, n, static_cast<unsigned>(g.integer(1, 4)), 4, 2);
    const auto phi = g.reparam(k);
    const auto f = tangent_curve(g, n, r, k);
    EXPECT_EQ(evaluate(gk_pullback(p, phi), f), evaluate(p, compose(f, phi)));
  }
}

TEST(Pullback, ContravariantAction) {
  Gen g(34);
  for (int trial = 0; trial < 25; ++trial) {
    const unsigned k = static_cast<unsigned>(g.integer(1, 4));
    const auto p = g.homogeneous(k, 1, 1, static_cast<unsigned>(g.integer(1, 5)), 3, 1);
    const auto phi = g.reparam(k), psi = g.reparam(k);
    EXPECT_EQ(gk_pullback(gk_pullback(p, phi), psi), gk_pullback(p, compose(psi, phi)));
  }
}

TEST(Pullback, HomothetyGrading) {
  Gen g(35);
  for (int trial = 0; trial < 30; ++trial) {
    const unsigned k = static_cast<unsigned>(g.integer(1, 3)), m = static_cast<unsigned>(g.integer(1, 6));
    const auto p = g.homogeneous(k, 2, 2, m, 4, 1);
    const Rational lambda = g.nonzero_rational();
    EXPECT_EQ(gk_pullback(p, Reparam<Rational>::homothety(lambda, k)), pow(lambda, m) * p);
  }
}

TEST(AlphaDecompose, SecondDerivative) {
  const auto second = JetPolynomial::monomial(2, 1, 1, {0, 1});
  const auto parts = alpha_decompose(second);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts.at({2, 0}), second);
  EXPECT_EQ(parts.at({0, 1}), JetPolynomial::monomial(2, 1, 1, {1, 0}));
  EXPECT_TRUE(alpha_decompose(JetPolynomial(2, 1, 1)).empty());
}

TEST(AlphaDecompose, InvariantHasSingleComponent) {
  const auto w = JetPolynomial::monomial(2, 1, 1, {3, 0}, Polynomial(2L));
  const auto parts = alpha_decompose(w);
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_EQ(parts.at({3, 0}), w);
}

TEST(AlphaDecompose, RejectsInhomogeneous) {
  JetPolynomial p(2, 1, 1);
  p.add_term({1, 0}, Polynomial(1L));
  p.add_term({0, 1}, Polynomial(1L));
  EXPECT_THROW(alpha_decompose(p), ParameterError);
}

TEST(AlphaDecompose, ReconstructsPullbackAndTracksDegrees) {
  Gen g(36);
  for (int trial = 0; trial < 50; ++trial) {
    const unsigned k = static_cast<unsigned>(g.integer(1, 3)), r = static_cast<unsigned>(g.integer(1, 2));
    const unsigned m = static_cast<unsigned>(g.integer(1, 5));
    const auto p = g.homogeneous(k, r, r, m, 4, 1);
    const auto phi = g.reparam(k);
    const auto f = tangent_curve(g, r, r, k);
    const auto parts = alpha_decompose(p);
    Rational sum = 0;
    for (const auto& [a, part] : parts) {
      sum += reparam_monomial(phi, a) * evaluate(part, f);
      EXPECT_EQ(weighted_degree(a), m);
      EXPECT_EQ(part.homogeneous_degree(), total(a));
      if (a[0] != m) {
        EXPECT_LT(total(a), m);
      }
    }
    EXPECT_EQ(sum, evaluate(p, compose(f, phi)));
  }
}

TEST(IsInvariant, Examples) {
  EXPECT_TRUE(is_invariant(JetPolynomial::monomial(3, 1, 1, {4, 0, 0})));
  EXPECT_FALSE(is_invariant(JetPolynomial::monomial(2, 1, 1, {0, 1})));
  EXPECT_TRUE(is_invariant(JetPolynomial::monomial(2, 1, 1, {3, 0}, Polynomial(2L))));
  // f1' f2'' - f2' f1'' is invariant.
  JetPolynomial w(2, 2, 2);
  w.add_term({1, 0, 0, 1}, Polynomial(1L));
  w.add_term({0, 1, 1, 0}, Polynomial(-1L));
  EXPECT_TRUE(is_invariant(w));
}

TEST(InvariantExtract, Examples) {
  const auto second = JetPolynomial::monomial(2, 1, 1, {0, 1});
  const auto out = invariant_extract(second);
  EXPECT_EQ(out.op, JetPolynomial::monomial(2, 1, 1, {1, 0}));
  EXPECT_EQ(out.degree, 1u);
  EXPECT_EQ(out.alpha, (ReparamExponent{0, 1}));

  const auto inv = JetPolynomial::monomial(2, 1, 1, {3, 0}, Polynomial(2L));
  const auto same = invariant_extract(inv);
  EXPECT_EQ(same.op, inv);
  EXPECT_EQ(same.degree, 3u);
  EXPECT_THROW(invariant_extract(JetPolynomial(2, 1, 1)), ParameterError);
}

TEST(InvariantExtract, OutputIsInvariant) {
  Gen g(37);
  for (int trial = 0; trial < 50; ++trial) {
    const unsigned k = static_cast<unsigned>(g.integer(1, 3)), m = static_cast<unsigned>(g.integer(1, 6));
    const auto p = g.homogeneous(k, 1, 1, m, 4, 1);
    if (p.is_zero()) continue;
    const auto out = invariant_extract(p);
    EXPECT_FALSE(out.op.is_zero());
    EXPECT_TRUE(is_invariant(out.op));
    EXPECT_LE(out.degree, m);
    EXPECT_EQ(out.degree == m, is_invariant(p));
  }
}

TEST(TotalDerivative, FirstDerivative) {
  EXPECT_EQ(total_derivative(JetPolynomial::monomial(1, 1, 1, {1})), JetPolynomial::monomial(2, 1, 1, {0, 1}));
}

TEST(TotalDerivative, WorkedExample) {
  // Q = a f1'^3 f2' + b f1''^2.
  const Polynomial a = z(0) * z(0) * z(1), b = z(0) + Rational(3) * z(1) * z(1);
  JetPolynomial q(2, 2, 2);
  q.add_term({3, 1, 0, 0}, a);
  q.add_term({0, 0, 2, 0}, b);
  JetPolynomial expected(3, 2, 2);
  expected.add_term({4, 1, 0, 0, 0, 0}, a.derivative(0));
  expected.add_term({3, 2, 0, 0, 0, 0}, a.derivative(1));
  expected.add_term({1, 0, 2, 0, 0, 0}, b.derivative(0));
  expected.add_term({0, 1, 2, 0, 0, 0}, b.derivative(1));
  expected.add_term({2, 1, 1, 0, 0, 0}, Rational(3) * a);
  expected.add_term({3, 0, 0, 1, 0, 0}, a);
  expected.add_term({0, 0, 1, 0, 1, 0}, Rational(2) * b);
  EXPECT_EQ(total_derivative(q), expected);
}

TEST(TotalDerivative, GradingAndChainRuleOracle) {
  Gen g(38);
  for (int trial = 0; trial < 50; ++trial) {
    const unsigned k = static_cast<unsigned>(g.integer(1, 3)), r = static_cast<unsigned>(g.integer(1, 2));
    const unsigned n = r + static_cast<unsigned>(g.integer(0, 1));
    const unsigned m = static_cast<unsigned>(g.integer(1, 5));
    const auto p = g.homogeneous(k, r, n, m, 4, 2);
    const auto d = total_derivative(p);
    EXPECT_EQ(d.k(), k + 1);
    if (!d.is_zero()) {
      EXPECT_EQ(d.homogeneous_degree(), m + 1);
    }
    const auto f = tangent_curve(g, n, r, k + 1);
    EXPECT_EQ(evaluate(d, f), derivative_along(p, f));
  }
}
