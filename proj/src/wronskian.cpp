#include "jetdiff/wronskian.hpp"

#include <algorithm>
#include <functional>

namespace jetdiff {

namespace {

unsigned wronskian_order(std::size_t count) {
  if (count == 0) throw ParameterError("a Wronskian needs at least one section");
  return static_cast<unsigned>(count - 1);
}

std::vector<ScalarJet<Rational>> compose_sections(const std::vector<Polynomial>& sections,
                                                  const CurveJet<Rational>& f) {
  const PolynomialMap psi{f.ambient_dim(), sections};
  return map_compose(psi, f).components();
}

// The jet of D^l g, dropping the top l orders.
template <class S>
ScalarJet<S> shifted(const ScalarJet<S>& g, unsigned l, unsigned order) {
  const auto& d = g.derivs();
  return ScalarJet<S>(std::vector<S>(d.begin() + l, d.begin() + l + order + 1));
}

// Visits the increasing index tuples of the given length in lexicographic
// order until visit returns false.
void for_each_combination(unsigned n, unsigned size,
                          const std::function<bool(const std::vector<unsigned>&)>& visit) {
  std::vector<unsigned> idx(size);
  for (unsigned i = 0; i < size; ++i) idx[i] = i;
  if (size > n) return;
  while (true) {
    if (!visit(idx)) return;
    int i = static_cast<int>(size) - 1;
    while (i >= 0 && idx[i] == n - size + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (unsigned j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Matrix<Rational> section_jet_matrix(const std::vector<ScalarJet<Rational>>& jets) {
  const unsigned k = wronskian_order(jets.size());
  Matrix<Rational> m(k + 1, k + 1, Rational(0));
  for (unsigned j = 0; j <= k; ++j) {
    if (jets[j].order() < k) {
      throw ParameterError("jet " + std::to_string(j) + " has order " +
                           std::to_string(jets[j].order()) + " < k = " + std::to_string(k));
    }
    for (unsigned l = 0; l <= k; ++l) m(l, j) = jets[j][l];
  }
  return m;
}

Rational wronskian_eval(const std::vector<ScalarJet<Rational>>& jets) {
  return determinant_bareiss(section_jet_matrix(jets));
}

Rational wronskian_symbolic(const std::vector<Polynomial>& sections, const CurveJet<Rational>& f) {
  const unsigned k = wronskian_order(sections.size());
  if (f.order() < k) throw ParameterError("curve jet order is below the Wronskian order");
  return wronskian_eval(compose_sections(sections, f));
}

JetPolynomial wronskian_operator(const std::vector<Polynomial>& sections, unsigned n, unsigned r) {
  const unsigned k = wronskian_order(sections.size());
  if (k == 0) throw ParameterError("a Wronskian operator needs at least two sections");
  for (const auto& s : sections) {
    if (s.num_vars() > n) throw ParameterError("section uses more than n base variables");
  }
  const CurveJet<Polynomial> f = symbolic_curve_jet(k, r, n);
  const PolynomialMap psi{n, sections};
  const auto composed = map_compose(psi, f).components();
  Matrix<Polynomial> m(k + 1, k + 1, Polynomial());
  for (unsigned j = 0; j <= k; ++j) {
    for (unsigned l = 0; l <= k; ++l) m(l, j) = composed[j][l];
  }
  return JetPolynomial::from_flat(determinant_leibniz(m, Polynomial()), k, r, n);
}

ScalarJet<Rational> wronskian_jet(const std::vector<ScalarJet<Rational>>& jets) {
  const unsigned k = wronskian_order(jets.size());
  const unsigned order = jets.front().order();
  for (const auto& j : jets) {
    if (j.order() != order) throw ParameterError("Wronskian jets must share one order");
  }
  if (order < k) throw ParameterError("jet order is below the Wronskian order");
  const unsigned out = order - k;
  Matrix<ScalarJet<Rational>> m(k + 1, k + 1, ScalarJet<Rational>::constant(0, out));
  for (unsigned j = 0; j <= k; ++j) {
    for (unsigned l = 0; l <= k; ++l) m(l, j) = shifted(jets[j], l, out);
  }
  return determinant_leibniz(m, ScalarJet<Rational>::constant(0, out));
}

FactorLawRecord gcd_factor_law(const Polynomial& g, const std::vector<Polynomial>& sections,
                               const CurveJet<Rational>& f) {
  const unsigned k = wronskian_order(sections.size());
  if (f.order() < k) throw ParameterError("curve jet order is below the Wronskian order");
  std::vector<Polynomial> scaled;
  for (const auto& s : sections) scaled.push_back(g * s);

  const auto plain = compose_sections(sections, f);
  const auto twisted = compose_sections(scaled, f);
  const ScalarJet<Rational> gf = compose_sections({g}, f).front();

  const unsigned out = f.order() - k;
  const ScalarJet<Rational> g_trunc = gf.truncate(out);
  ScalarJet<Rational> g_power = ScalarJet<Rational>::constant(1, out);
  for (unsigned i = 0; i <= k; ++i) g_power = g_power * g_trunc;

  FactorLawRecord rec{wronskian_eval(twisted), Rational(0), wronskian_jet(twisted),
                      g_power * wronskian_jet(plain), false, false};
  rec.scalar_rhs = pow(gf.value(), k + 1) * wronskian_eval(plain);
  rec.scalar_holds = rec.scalar_lhs == rec.scalar_rhs;
  rec.jet_holds = rec.jet_lhs == rec.jet_rhs;
  return rec;
}

bool rank_condition(const Matrix<Rational>& m) {
  if (m.cols() > m.rows()) throw ParameterError("rank condition needs at most k+1 columns");
  return rank(m) == m.cols();
}

AlternatingForm::AlternatingForm(unsigned dim, unsigned degree,
                                 std::map<Index, Rational> coefficients)
    : dim_(dim), degree_(degree) {
  if (degree == 0) throw ParameterError("alternating form needs degree >= 1");
  for (auto& [idx, c] : coefficients) {
    if (idx.size() != degree) throw ParameterError("coefficient index has the wrong length");
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (idx[i] >= dim) throw ParameterError("coefficient index out of range");
      if (i > 0 && idx[i] <= idx[i - 1]) {
        throw ParameterError("coefficient indices must be strictly increasing");
      }
    }
    if (c != 0) coefficients_.emplace(idx, c);
  }
}

AlternatingForm AlternatingForm::from_tensor(unsigned dim, unsigned degree,
                                             const std::vector<Rational>& tensor) {
  std::size_t size = 1;
  for (unsigned i = 0; i < degree; ++i) size *= dim;
  if (tensor.size() != size) throw ParameterError("tensor must have dim^degree entries");
  auto offset = [dim](const Index& idx) {
    std::size_t o = 0;
    for (auto i : idx) o = o * dim + i;
    return o;
  };
  Index idx(degree, 0);
  std::map<Index, Rational> coeffs;
  for (std::size_t flat = 0; flat < size; ++flat) {
    std::size_t rest = flat;
    for (unsigned p = degree; p-- > 0;) {
      idx[p] = static_cast<unsigned>(rest % dim);
      rest /= dim;
    }
    Index sorted = idx;
    int sign = 1;
    for (std::size_t a = 0; a < sorted.size(); ++a) {
      for (std::size_t b = a + 1; b < sorted.size(); ++b) {
        if (sorted[a] > sorted[b]) sign = -sign;
      }
    }
    std::sort(sorted.begin(), sorted.end());
    const bool repeated = std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
    const Rational& value = tensor[flat];
    const Rational expected = repeated ? Rational(0) : sign * tensor[offset(sorted)];
    if (value != expected) throw ParameterError("tensor is not alternating");
    if (!repeated && sorted == idx) coeffs.emplace(idx, value);
  }
  return AlternatingForm(dim, degree, std::move(coeffs));
}

AlternatingForm AlternatingForm::determinant(unsigned dim) {
  Index idx(dim);
  for (unsigned i = 0; i < dim; ++i) idx[i] = i;
  return AlternatingForm(dim, dim, {{idx, Rational(1)}});
}

Rational AlternatingForm::operator()(const std::vector<std::vector<Rational>>& vectors) const {
  if (vectors.size() != degree_) throw ParameterError("alternating form arity mismatch");
  for (const auto& v : vectors) {
    if (v.size() != dim_) throw ParameterError("vector dimension mismatch");
  }
  Rational total = 0;
  for (const auto& [rows, c] : coefficients_) {
    Matrix<Rational> m(degree_, degree_, Rational(0));
    for (unsigned a = 0; a < degree_; ++a) {
      for (unsigned b = 0; b < degree_; ++b) m(a, b) = vectors[b][rows[a]];
    }
    total += c * determinant_bareiss(std::move(m));
  }
  return total;
}

bool rank_locus_membership(const AlternatingForm& psi,
                           const std::vector<std::vector<Rational>>& vectors, unsigned r) {
  const auto count = static_cast<unsigned>(vectors.size());
  if (psi.dim() > kMaxLocusDim) {
    throw ResourceLimit("exhaustive membership check limited to dim <= " +
                        std::to_string(kMaxLocusDim));
  }
  if (r == 0 || r > count) throw ParameterError("need 1 <= r <= N");
  if (r > psi.degree()) throw ParameterError("need r <= degree of the form");
  for (const auto& v : vectors) {
    if (v.size() != psi.dim()) throw ParameterError("vector dimension mismatch");
  }
  // By multilinearity basis vectors suffice for h, and by alternation only
  // increasing tuples of distinct ones can give a nonzero value.
  bool member = true;
  for_each_combination(count, r, [&](const std::vector<unsigned>& subset) {
    for_each_combination(psi.dim(), psi.degree() - r, [&](const std::vector<unsigned>& basis) {
      std::vector<std::vector<Rational>> args;
      for (auto j : subset) args.push_back(vectors[j]);
      for (auto b : basis) {
        std::vector<Rational> e(psi.dim(), Rational(0));
        e[b] = 1;
        args.push_back(std::move(e));
      }
      if (psi(args) != 0) member = false;
      return member;
    });
    return member;
  });
  return member;
}

}  // namespace jetdiff
