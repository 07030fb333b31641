#include "jetdiff/serialize.hpp"

#include <string>

namespace jetdiff {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParameterError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

unsigned to_unsigned(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw ParameterError(std::string(what) + " must be a nonnegative integer");
  }
  return static_cast<unsigned>(j.get<long long>());
}

}  // namespace

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  throw ParameterError("rational must be a \"p/q\" string or an integer");
}

Json rational_to_json(const Rational& q) { return to_string(q); }

CurveJet<Rational> curve_jet_from_json(const Json& j) {
  const unsigned order = to_unsigned(require(j, "order"), "order");
  const Json& comps = require(j, "components");
  if (!comps.is_array() || comps.empty()) throw ParameterError("components must be a non-empty array");
  std::vector<ScalarJet<Rational>> out;
  for (const auto& c : comps) {
    if (!c.is_array() || c.size() != order + 1) {
      throw ParameterError("each component needs exactly order+1 derivative values");
    }
    std::vector<Rational> d;
    for (const auto& x : c) d.push_back(rational_from_json(x));
    out.emplace_back(std::move(d));
  }
  return CurveJet<Rational>(std::move(out));
}

Json curve_jet_to_json(const CurveJet<Rational>& f) {
  Json comps = Json::array();
  for (const auto& c : f.components()) {
    Json d = Json::array();
    for (const auto& x : c.derivs()) d.push_back(rational_to_json(x));
    comps.push_back(std::move(d));
  }
  return Json{{"order", f.order()}, {"components", std::move(comps)}};
}

Polynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw ParameterError("polynomial must be an array of terms");
  Polynomial p;
  for (const auto& t : j) {
    std::vector<std::uint32_t> e;
    for (const auto& x : require(t, "exponents")) e.push_back(to_unsigned(x, "exponent"));
    p.add_term(Monomial(std::move(e)), rational_from_json(require(t, "coeff")));
  }
  return p;
}

Json polynomial_to_json(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& [mono, c] : p.terms()) {
    out.push_back(Json{{"exponents", mono.exponents()}, {"coeff", rational_to_json(c)}});
  }
  return out;
}

JetPolynomial jet_polynomial_from_json(const Json& j) {
  const unsigned k = to_unsigned(require(j, "k"), "k");
  const unsigned r = to_unsigned(require(j, "r"), "r");
  const unsigned n = to_unsigned(require(j, "n"), "n");
  JetPolynomial p(k, r, n);
  const Json& terms = require(j, "terms");
  if (!terms.is_array()) throw ParameterError("terms must be an array");
  for (const auto& t : terms) {
    const Json& alpha = require(t, "alpha");
    if (!alpha.is_array() || alpha.size() != k) throw ParameterError("alpha needs exactly k blocks");
    JetExponent flat;
    for (const auto& block : alpha) {
      if (!block.is_array() || block.size() != r) throw ParameterError("alpha blocks need width r");
      for (const auto& x : block) flat.push_back(to_unsigned(x, "alpha entry"));
    }
    p.add_term(std::move(flat), polynomial_from_json(require(t, "coeff")));
  }
  return p;
}

Json jet_polynomial_to_json(const JetPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [alpha, c] : p.terms()) {
    Json blocks = Json::array();
    for (unsigned s = 0; s < p.k(); ++s) {
      blocks.push_back(std::vector<std::uint32_t>(alpha.begin() + s * p.r(),
                                                  alpha.begin() + (s + 1) * p.r()));
    }
    terms.push_back(Json{{"alpha", std::move(blocks)}, {"coeff", polynomial_to_json(c)}});
  }
  return Json{{"k", p.k()}, {"r", p.r()}, {"n", p.n()}, {"terms", std::move(terms)}};
}

}  // namespace jetdiff
