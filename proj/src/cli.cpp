#include "jetdiff/cli.hpp"

#include "jetdiff/dims.hpp"
#include "jetdiff/interval.hpp"
#include "jetdiff/jet_poly.hpp"
#include "jetdiff/kobayashi.hpp"
#include "jetdiff/mc.hpp"
#include "jetdiff/morse.hpp"
#include "jetdiff/serialize.hpp"
#include "jetdiff/wronskian.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>

namespace jetdiff {

namespace {

// Integers go out as JSON numbers when they fit in 64 bits, otherwise as
// decimal strings.
Json big_to_json(const BigInt& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Json interval_to_json(const Interval& x, unsigned digits) {
  return Json{{"approx", x.to_string(std::min(digits, 30u))},
              {"lower", x.lower_double()},
              {"upper", x.upper_double()}};
}

Json reparam_exponent_to_json(const ReparamExponent& a) { return Json(a); }

Json report(const std::string& command, Json inputs, Json outputs,
            std::vector<std::string> provenance) {
  return Json{{"command", command},
              {"inputs", std::move(inputs)},
              {"outputs", std::move(outputs)},
              {"provenance", std::move(provenance)},
              {"version", kVersion}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParameterError("malformed JSON in " + path + ": " + e.what());
  }
}

// The file name without its directory, plus the parsed content, so reports
// do not depend on where the input lives.
Json file_inputs(const std::string& path, const Json& payload) {
  return Json{{"file", std::filesystem::path(path).filename().string()}, {"payload", payload}};
}

std::vector<std::string> invariant_provenance(const std::string& action) {
  if (action == "degree") return {"jet_poly.weighted_degree"};
  if (action == "nabla") return {"jet_poly.total_derivative"};
  if (action == "is-invariant") return {"jet_poly.alpha_decomposition", "jet_poly.invariance"};
  return {"jet_poly.reparametrization_action", "jet_poly.alpha_decomposition",
          "jet_poly.minimal_component"};
}

std::vector<std::string> ggl_provenance(unsigned n) {
  std::vector<std::string> prov{"ggl.critical_condition", "ggl.ampleness_condition",
                                "morse.constants"};
  if (n >= 4) prov.push_back("ggl.closed_form_bound");
  return prov;
}

unsigned default_digits() {
  if (const char* env = std::getenv("JETDIFF_DIGITS")) {
    try {
      const long d = std::stol(env);
      if (d >= 10 && d <= 10000) return static_cast<unsigned>(d);
    } catch (const std::exception&) {
    }
    throw ParameterError("JETDIFF_DIGITS must be an integer in [10, 10000]");
  }
  return kDefaultDigits;
}

Json ggl_bounds(unsigned n, const std::string& ratio, const std::string& p, unsigned digits) {
  GglOptions opt;
  if (ratio == "published") opt.ratio = RatioSource::Published;
  if (p == "quartic") opt.p = PChoice::QuarticMinus;
  const GglCertificate cert = ggl_min_degree(n, opt);
  Json out{{"d_min", big_to_json(cert.d_min)},
           {"ratio", to_string(cert.ratio)},
           {"p", to_string(cert.p)},
           {"threshold", to_string(cert.threshold)},
           {"ratio_source", to_string(cert.options.ratio)},
           {"p_choice", to_string(cert.options.p)}};
  if (n >= 4) out["closed_form_bound"] = big_to_json(ggl_bound_formula(n, digits));
  return out;
}

Json kobayashi_report(unsigned long n, std::optional<unsigned long> r, unsigned digits) {
  const BoundReport rep = kobayashi_bound(n, digits, r);
  const auto& p = rep.params;
  Json params{{"n", p.n},         {"c", p.c},
              {"N", p.N},         {"k", p.k},
              {"k_prime", p.k_prime()},
              {"r", p.r},         {"b", big_to_json(p.b)},
              {"B", big_to_json(p.B)},
              {"delta", big_to_json(p.delta)},
              {"lambda", big_to_json(p.lambda)},
              {"rho", big_to_json(p.rho)},
              {"p", big_to_json(p.p)}};
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"note", c.note}});
  }
  Json out{{"d_n", big_to_json(rep.d_n)},
           {"bound_half_power", big_to_json(rep.bound_half_power)},
           {"bound_fifth", big_to_json(rep.bound_fifth)},
           {"params", std::move(params)},
           {"checks", std::move(checks)}};
  if (rep.d_adjunction) {
    out["d_adjunction"] = big_to_json(*rep.d_adjunction);
    out["d_n_source"] = "pipeline";
  }
  const StirlingCheck st = stirling_b_bound(n, digits);
  out["stirling_b"] = Json{{"b", big_to_json(st.b)},
                           {"bound", interval_to_json(st.bound, digits)},
                           {"ok", st.ok}};
  return out;
}

Json constants_report(unsigned n, unsigned r, unsigned k, unsigned digits) {
  const MorseConstants mc = morse_constants(n, r, k);
  Json out{{"c", to_string(mc.c)}, {"c_prime", to_string(mc.c_prime)}};
  if (mc.c != 0) out["ratio"] = to_string(mc.ratio());
  if (const auto pub = published_morse_constants(n, r, k)) {
    out["published"] = Json{{"c", to_string(pub->c)},
                            {"c_prime", to_string(pub->c_prime)},
                            {"ratio", to_string(pub->ratio())}};
    out["matches_published"] = pub->c == mc.c && pub->c_prime == mc.c_prime;
  }
  if (n == r && r == k && n >= 2) {
    const RatioBounds rb = ratio_bounds(n, digits);
    out["ratio_bounds"] = Json{{"intermediate", interval_to_json(rb.intermediate, digits)},
                               {"intermediate_holds", rb.intermediate_holds},
                               {"log_natural", interval_to_json(rb.log_natural, digits)},
                               {"log_natural_holds", rb.log_natural_holds},
                               {"log_base2", interval_to_json(rb.log_base2, digits)},
                               {"log_base2_holds", rb.log_base2_holds}};
  }
  return out;
}

Json dims_report(unsigned k, unsigned r, unsigned m) {
  Json pieces = Json::array();
  for (const auto& piece : graded_dims(k, r, m)) {
    pieces.push_back(Json{{"ell", piece.ell}, {"dim", big_to_json(piece.dim)}});
  }
  return Json{{"egg_dim", big_to_json(egg_dim(k, r, m))},
              {"graded", std::move(pieces)},
              {"lcm_weights", big_to_json(lcm_weights(k))}};
}

Json wronskian_report(const std::string& action, const Json& in) {
  if (action == "eval") {
    std::vector<ScalarJet<Rational>> jets;
    for (const auto& j : in.at("jets")) {
      std::vector<Rational> d;
      for (const auto& x : j) d.push_back(rational_from_json(x));
      jets.emplace_back(std::move(d));
    }
    return Json{{"value", to_string(wronskian_eval(jets))}};
  }
  std::vector<Polynomial> sections;
  for (const auto& s : in.at("sections")) sections.push_back(polynomial_from_json(s));
  if (action == "symbolic") {
    return Json{{"value", to_string(wronskian_symbolic(sections, curve_jet_from_json(in.at("jet"))))}};
  }
  const JetPolynomial w =
      wronskian_operator(sections, in.at("n").get<unsigned>(), in.at("r").get<unsigned>());
  return Json{{"operator", jet_polynomial_to_json(w)},
              {"weighted_degree", *w.homogeneous_degree()},
              {"is_invariant", is_invariant(w)}};
}

Json invariant_report(const std::string& action, const Json& in) {
  const JetPolynomial p = jet_polynomial_from_json(in);
  if (action == "degree") {
    const auto m = p.homogeneous_degree();
    return Json{{"homogeneous", m.has_value()}, {"weighted_degree", m ? Json(*m) : Json()}};
  }
  if (action == "is-invariant") return Json{{"is_invariant", is_invariant(p)}};
  if (action == "decompose") {
    Json parts = Json::array();
    for (const auto& [alpha, comp] : alpha_decompose(p)) {
      parts.push_back(Json{{"alpha", reparam_exponent_to_json(alpha)},
                           {"operator", jet_polynomial_to_json(comp)}});
    }
    return Json{{"components", std::move(parts)}};
  }
  if (action == "extract") {
    const ExtractedInvariant ex = invariant_extract(p);
    return Json{{"operator", jet_polynomial_to_json(ex.op)},
                {"degree", ex.degree},
                {"alpha", reparam_exponent_to_json(ex.alpha)},
                {"is_invariant", is_invariant(ex.op)}};
  }
  return Json{{"operator", jet_polynomial_to_json(total_derivative(p))}};
}

Json moment_to_json(const MomentReport& m) {
  return Json{{"mc", m.mc},
              {"exact", to_string(m.exact)},
              {"std_error", m.std_error},
              {"z", m.z},
              {"passed", m.passed}};
}

Json mc_report(const std::string& target, std::uint64_t samples, const RngConfig& cfg,
               bool& all_passed) {
  Json checks = Json::array();
  auto record = [&](Json entry, bool passed) {
    all_passed = all_passed && passed;
    checks.push_back(std::move(entry));
  };
  if (target == "simplex-moments" || target == "all") {
    struct Case { unsigned k, r; std::vector<unsigned> e; };
    const std::vector<Case> battery{{1, 3, {}},        {2, 2, {1}},    {2, 2, {1, 1}},
                                    {3, 3, {1, 1, 1}}, {3, 2, {2}},    {4, 1, {1, 0, 2}}};
    for (const auto& c : battery) {
      const MomentReport m = verify_simplex_moment(c.e, c.k, c.r, samples, cfg);
      Json entry = moment_to_json(m);
      entry["kind"] = "simplex";
      entry["k"] = c.k;
      entry["r"] = c.r;
      entry["e"] = c.e;
      record(std::move(entry), m.passed);
    }
  }
  if (target == "sphere-moments" || target == "all") {
    struct Case { unsigned r, a, b; };
    const std::vector<Case> battery{{1, 0, 0}, {3, 0, 0}, {3, 0, 1}, {3, 2, 2}};
    for (const auto& c : battery) {
      const MomentReport m = verify_sphere_moment(c.r, c.a, c.b, samples, cfg);
      Json entry = moment_to_json(m);
      entry["kind"] = "sphere";
      entry["r"] = c.r;
      entry["a"] = c.a;
      entry["b"] = c.b;
      record(std::move(entry), m.passed);
    }
  }
  if (target == "gk-expectation" || target == "all") {
    struct Case { std::string name; CurvatureTensor t; unsigned k; };
    const std::vector<Case> battery{{"identity", identity_tensor(2, 2), 2},
                                    {"zero", CurvatureTensor(2, 2), 3},
                                    {"random_hermitian", random_hermitian_tensor(2, 3, 7), 2}};
    for (const auto& c : battery) {
      const GkEstimate est = estimate_gk_expectation(c.t, c.k, samples, cfg);
      record(Json{{"kind", "gk_expectation"},
                  {"tensor", c.name},
                  {"k", c.k},
                  {"max_abs_z", est.max_abs_z},
                  {"passed", est.passed}},
             est.passed);
    }
  }
  return Json{{"checks", std::move(checks)}, {"passed", all_passed}};
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact jet-differential toolkit", "jetdiff"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  unsigned digits = 0;
  app.add_option("--digits", digits, "decimal digits for interval arithmetic (default from JETDIFF_DIGITS or 50)")
      ->check(CLI::Range(10u, 10000u));

  std::function<Json(unsigned)> run;
  int status = kExitOk;

  auto* bounds = app.add_subcommand("bounds", "effective degree bounds");
  bounds->require_subcommand(1);
  auto* ggl = bounds->add_subcommand("ggl", "Green-Griffiths critical degree");
  unsigned ggl_n = 0;
  std::string ratio_source = "computed", p_choice = "infimum";
  ggl->add_option("--n", ggl_n, "dimension")->required();
  ggl->add_option("--ratio", ratio_source, "ratio source")
      ->check(CLI::IsMember({"computed", "published"}));
  ggl->add_option("--p", p_choice, "choice of p")->check(CLI::IsMember({"infimum", "quartic"}));
  ggl->callback([&] {
    run = [&](unsigned d) {
      return report("bounds ggl",
                    Json{{"n", ggl_n}, {"ratio", ratio_source}, {"p", p_choice}, {"digits", d}},
                    ggl_bounds(ggl_n, ratio_source, p_choice, d), ggl_provenance(ggl_n));
    };
  });

  auto* kob = bounds->add_subcommand("kobayashi", "Kobayashi degree pipeline");
  unsigned long kob_n = 0;
  std::optional<unsigned long> kob_r;
  kob->add_option("--n", kob_n, "dimension")->required();
  kob->add_option("--r", kob_r, "override r (default n^2+1)");
  kob->callback([&] {
    run = [&](unsigned d) {
      Json inputs{{"n", kob_n}, {"digits", d}};
      if (kob_r) inputs["r"] = *kob_r;
      return report("bounds kobayashi", std::move(inputs), kobayashi_report(kob_n, kob_r, d),
                    {"kobayashi.parameter_choice", "kobayashi.inequality_k",
                     "kobayashi.degree_split", "kobayashi.p_exponent",
                     "kobayashi.divisibility_sum", "kobayashi.degree_formula",
                     "kobayashi.simplified_bounds", "kobayashi.stirling_b"});
    };
  });

  auto* constants = app.add_subcommand("constants", "exact Morse constants");
  unsigned cn = 0, cr = 0, ck = 0;
  constants->add_option("--n", cn)->required();
  constants->add_option("--r", cr)->required();
  constants->add_option("--k", ck)->required();
  constants->callback([&] {
    run = [&](unsigned d) {
      return report("constants", Json{{"n", cn}, {"r", cr}, {"k", ck}, {"digits", d}},
                    constants_report(cn, cr, ck, d),
                    {"morse.constants", "morse.closed_form_c", "morse.ratio_bounds",
                     "morse.special_values"});
    };
  });

  auto* dims = app.add_subcommand("dims", "jet differential dimensions");
  unsigned dk = 0, dr = 0, dm = 0;
  dims->add_option("--k", dk)->required();
  dims->add_option("--r", dr)->required();
  dims->add_option("--m", dm)->required();
  dims->callback([&] {
    run = [&](unsigned) {
      return report("dims", Json{{"k", dk}, {"r", dr}, {"m", dm}}, dims_report(dk, dr, dm),
                    {"dims.weighted_monomials", "dims.graded_pieces", "dims.lcm_weights"});
    };
  });

  auto* wr = app.add_subcommand("wronskian", "Wronskian operators");
  std::string wr_action, wr_file;
  wr->add_option("action", wr_action, "eval | symbolic | operator")
      ->required()
      ->check(CLI::IsMember({"eval", "symbolic", "operator"}));
  wr->add_option("--file", wr_file, "JSON input")->required();
  wr->callback([&] {
    run = [&](unsigned) {
      const Json payload = read_json_file(wr_file);
      std::vector<std::string> prov{"wronskian.determinant", "jet.map_composition"};
      if (wr_action == "operator") prov.push_back("jet_poly.invariance");
      return report("wronskian " + wr_action, file_inputs(wr_file, payload),
                    wronskian_report(wr_action, payload), prov);
    };
  });

  auto* mc = app.add_subcommand("mc", "Monte Carlo verification");
  mc->require_subcommand(1);
  auto* verify = mc->add_subcommand("verify", "compare exact moments with sampling");
  std::string target = "all";
  RngConfig cfg;
  std::uint64_t samples = 100000;
  verify->add_option("--target", target)
      ->check(CLI::IsMember({"simplex-moments", "sphere-moments", "gk-expectation", "all"}));
  verify->add_option("--seed", cfg.seed);
  verify->add_option("--streams", cfg.streams)->check(CLI::Range(1u, 256u));
  verify->add_option("--samples", samples)->check(CLI::PositiveNumber);
  verify->callback([&] {
    run = [&](unsigned) {
      bool passed = true;
      Json outputs = mc_report(target, samples, cfg, passed);
      if (!passed) status = kExitStatistical;
      return report("mc verify",
                    Json{{"target", target},
                         {"samples", samples},
                         {"rng", Json{{"seed", cfg.seed}, {"streams", cfg.streams}}}},
                    std::move(outputs),
                    {"mc.dirichlet_moments", "mc.sphere_moments", "mc.expected_curvature"});
    };
  });

  auto* inv = app.add_subcommand("invariant", "jet polynomial operations");
  std::string inv_action, inv_file;
  inv->add_option("--file", inv_file, "JSON operator")->required();
  inv->add_option("--action", inv_action)
      ->required()
      ->check(CLI::IsMember({"degree", "is-invariant", "decompose", "extract", "nabla"}));
  inv->callback([&] {
    run = [&](unsigned) {
      const Json payload = read_json_file(inv_file);
      Json inputs = file_inputs(inv_file, payload);
      inputs["action"] = inv_action;
      return report("invariant " + inv_action, std::move(inputs),
                    invariant_report(inv_action, payload), invariant_provenance(inv_action));
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParameter;
  }

  try {
    const unsigned d = digits != 0 ? digits : default_digits();
    const Json result = run(d);
    out << result.dump(2) << '\n';
    return status;
  } catch (const FloorAmbiguous& e) {
    err << "error: " << e.what() << '\n';
    return kExitFloorAmbiguous;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParameter;
  } catch (const ResourceLimit& e) {
    err << "error: " << e.what() << '\n';
    return kExitParameter;
  } catch (const SingularJet& e) {
    err << "error: " << e.what() << '\n';
    return kExitParameter;
  } catch (const Json::exception& e) {
    err << "error: malformed input: " << e.what() << '\n';
    return kExitParameter;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace jetdiff
