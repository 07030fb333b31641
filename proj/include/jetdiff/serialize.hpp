#pragma once

// JSON forms shared by the CLI and the golden tests. Rationals are always
// strings "p/q"; integers are accepted on input as "p" or a JSON integer.

#include "jetdiff/jet.hpp"
#include "jetdiff/jet_poly.hpp"
#include "jetdiff/polynomial.hpp"

#include <json.hpp>

namespace jetdiff {

using Json = nlohmann::json;

Rational rational_from_json(const Json& j);
Json rational_to_json(const Rational& q);

/// {"order": k, "components": [["p/q", ...], ...]}
CurveJet<Rational> curve_jet_from_json(const Json& j);
Json curve_jet_to_json(const CurveJet<Rational>& f);

/// [{"exponents": [e0, e1, ...], "coeff": "p/q"}, ...]
Polynomial polynomial_from_json(const Json& j);
Json polynomial_to_json(const Polynomial& p);

/// {"k", "r", "n", "terms": [{"alpha": [[block 1], ..., [block k]], "coeff": poly}]}
JetPolynomial jet_polynomial_from_json(const Json& j);
Json jet_polynomial_to_json(const JetPolynomial& p);

}  // namespace jetdiff
