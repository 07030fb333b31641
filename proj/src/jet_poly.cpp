#include "jetdiff/jet_poly.hpp"

#include <algorithm>
#include <sstream>

namespace jetdiff {

unsigned weighted_degree(const JetExponent& alpha, unsigned k, unsigned r) {
  if (alpha.size() != static_cast<std::size_t>(k) * r) {
    throw ParameterError("jet exponent has " + std::to_string(alpha.size()) +
                         " entries, expected k*r = " + std::to_string(k * r));
  }
  unsigned m = 0;
  for (unsigned s = 1; s <= k; ++s) {
    for (unsigned i = 0; i < r; ++i) m += s * alpha[(s - 1) * r + i];
  }
  return m;
}

unsigned weighted_degree(const ReparamExponent& alpha) {
  unsigned m = 0;
  for (std::size_t s = 0; s < alpha.size(); ++s) m += static_cast<unsigned>(s + 1) * alpha[s];
  return m;
}

JetPolynomial::JetPolynomial(unsigned k, unsigned r, unsigned n) : k_(k), r_(r), n_(n) {
  if (k == 0 || r == 0) throw ParameterError("jet polynomial needs k >= 1 and r >= 1");
  if (r > n) throw ParameterError("jet polynomial needs r <= n");
}

JetPolynomial JetPolynomial::monomial(unsigned k, unsigned r, unsigned n, JetExponent alpha,
                                      Polynomial coeff) {
  JetPolynomial p(k, r, n);
  p.add_term(std::move(alpha), coeff);
  return p;
}

void JetPolynomial::add_term(JetExponent alpha, const Polynomial& coeff) {
  if (alpha.size() != static_cast<std::size_t>(k_) * r_) {
    throw ParameterError("jet exponent must have exactly k blocks of width r");
  }
  if (coeff.num_vars() > n_) throw ParameterError("coefficient uses more than n base variables");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(std::move(alpha), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<unsigned> JetPolynomial::homogeneous_degree() const {
  std::optional<unsigned> m;
  for (const auto& [alpha, c] : terms_) {
    const unsigned d = weighted_degree(alpha, k_, r_);
    if (m && *m != d) return std::nullopt;
    m = d;
  }
  if (!m) return 0u;
  return m;
}

JetPolynomial JetPolynomial::with_order(unsigned k) const {
  if (k < k_) throw ParameterError("cannot lower the jet order of an operator");
  JetPolynomial out(k, r_, n_);
  for (const auto& [alpha, c] : terms_) {
    JetExponent padded = alpha;
    padded.resize(static_cast<std::size_t>(k) * r_, 0);
    out.add_term(std::move(padded), c);
  }
  return out;
}

void JetPolynomial::check_compatible(const JetPolynomial& other) const {
  if (k_ != other.k_ || r_ != other.r_ || n_ != other.n_) {
    throw ParameterError("jet polynomial shape mismatch");
  }
}

JetPolynomial& JetPolynomial::operator+=(const JetPolynomial& other) {
  check_compatible(other);
  for (const auto& [alpha, c] : other.terms_) add_term(alpha, c);
  return *this;
}

JetPolynomial& JetPolynomial::operator-=(const JetPolynomial& other) {
  check_compatible(other);
  for (const auto& [alpha, c] : other.terms_) add_term(alpha, -c);
  return *this;
}

JetPolynomial& JetPolynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [alpha, c] : terms_) c *= scalar;
  return *this;
}

JetPolynomial operator*(const JetPolynomial& a, const JetPolynomial& b) {
  a.check_compatible(b);
  JetPolynomial out(a.k_, a.r_, a.n_);
  for (const auto& [aa, ca] : a.terms_) {
    for (const auto& [ab, cb] : b.terms_) {
      JetExponent sum = aa;
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += ab[i];
      out.add_term(std::move(sum), ca * cb);
    }
  }
  return out;
}

Polynomial JetPolynomial::to_flat() const {
  Polynomial flat;
  for (const auto& [alpha, c] : terms_) {
    std::vector<std::uint32_t> e(n_ + alpha.size(), 0);
    std::copy(alpha.begin(), alpha.end(), e.begin() + n_);
    flat += c * Polynomial::term(Monomial(std::move(e)), Rational(1));
  }
  return flat;
}

JetPolynomial JetPolynomial::from_flat(const Polynomial& p, unsigned k, unsigned r, unsigned n) {
  JetPolynomial out(k, r, n);
  const std::size_t width = static_cast<std::size_t>(k) * r;
  for (const auto& [mono, c] : p.terms()) {
    const auto& e = mono.exponents();
    if (e.size() > n + width) {
      throw ParameterError("flat polynomial has variables beyond the jet block");
    }
    std::vector<std::uint32_t> base(e.begin(), e.begin() + std::min<std::size_t>(n, e.size()));
    JetExponent alpha(width, 0);
    for (std::size_t v = n; v < e.size(); ++v) alpha[v - n] = e[v];
    out.add_term(std::move(alpha), Polynomial::term(Monomial(std::move(base)), c));
  }
  return out;
}

std::string JetPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [alpha, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.to_string() << ')';
    for (unsigned s = 1; s <= k_; ++s) {
      for (unsigned i = 0; i < r_; ++i) {
        const auto e = alpha[(s - 1) * r_ + i];
        if (e == 0) continue;
        os << "*f" << i << "^(" << s << ')';
        if (e != 1) os << '^' << e;
      }
    }
  }
  return os.str();
}

Rational evaluate(const JetPolynomial& p, const CurveJet<Rational>& f) {
  if (f.ambient_dim() != p.n()) {
    throw ParameterError("curve dimension " + std::to_string(f.ambient_dim()) +
                         " does not match operator base dimension " + std::to_string(p.n()));
  }
  if (f.order() < p.k()) throw ParameterError("curve jet order is below the operator order");
  const std::vector<Rational> base = f.base_point();
  Rational total = 0;
  for (const auto& [alpha, c] : p.terms()) {
    Rational t = c.evaluate(base);
    if (t == 0) continue;
    for (unsigned s = 1; s <= p.k(); ++s) {
      for (unsigned i = 0; i < p.r(); ++i) {
        const auto e = alpha[(s - 1) * p.r() + i];
        if (e != 0) t *= pow(f[i][s], e);
      }
    }
    total += t;
  }
  return total;
}

CurveJet<Polynomial> symbolic_curve_jet(unsigned k, unsigned r, unsigned n) {
  std::vector<ScalarJet<Polynomial>> comps;
  comps.reserve(n);
  for (unsigned i = 0; i < n; ++i) {
    std::vector<Polynomial> d(k + 1);
    d[0] = Polynomial::variable(i);
    if (i < r) {
      for (unsigned s = 1; s <= k; ++s) d[s] = Polynomial::variable(jet_variable(n, r, s, i));
    }
    comps.emplace_back(std::move(d));
  }
  return CurveJet<Polynomial>(std::move(comps));
}

namespace {

// Flat form of P(f o phi) for the symbolic curve.
Polynomial pullback_flat(const JetPolynomial& p, const Reparam<Polynomial>& phi) {
  const unsigned k = p.k(), r = p.r(), n = p.n();
  const CurveJet<Polynomial> g = compose(symbolic_curve_jet(k, r, n), phi);
  std::map<std::pair<std::size_t, std::uint32_t>, Polynomial> power_cache;
  auto power = [&](unsigned s, unsigned i, std::uint32_t e) -> const Polynomial& {
    const std::size_t slot = (s - 1) * r + i;
    auto it = power_cache.find({slot, e});
    if (it == power_cache.end()) {
      it = power_cache.emplace(std::make_pair(slot, e), g[i][s].pow(e)).first;
    }
    return it->second;
  };
  Polynomial result;
  for (const auto& [alpha, c] : p.terms()) {
    Polynomial t = c;
    for (unsigned s = 1; s <= k; ++s) {
      for (unsigned i = 0; i < r; ++i) {
        const auto e = alpha[(s - 1) * r + i];
        if (e != 0) t *= power(s, i, e);
      }
    }
    result += t;
  }
  return result;
}

}  // namespace

JetPolynomial gk_pullback(const JetPolynomial& p, const Reparam<Rational>& phi) {
  if (phi.order() < p.k()) throw ParameterError("reparametrization order is below the operator order");
  std::vector<Polynomial> d;
  for (unsigned l = 0; l <= p.k(); ++l) d.emplace_back(phi.jet()[l]);
  const Reparam<Polynomial> lifted{ScalarJet<Polynomial>(std::move(d))};
  return JetPolynomial::from_flat(pullback_flat(p, lifted), p.k(), p.r(), p.n());
}

std::map<ReparamExponent, JetPolynomial> alpha_decompose(const JetPolynomial& p) {
  const auto m = p.homogeneous_degree();
  if (!m) throw ParameterError("alpha decomposition needs a homogeneous operator");
  std::map<ReparamExponent, JetPolynomial> out;
  if (p.is_zero()) return out;

  const unsigned k = p.k(), r = p.r(), n = p.n();
  const std::size_t phi_base = n + static_cast<std::size_t>(k) * r;
  std::vector<Polynomial> d(k + 1);
  for (unsigned l = 1; l <= k; ++l) d[l] = Polynomial::variable(phi_base + l - 1);
  const Reparam<Polynomial> phi{ScalarJet<Polynomial>(std::move(d))};

  std::map<ReparamExponent, Polynomial> grouped;
  const Polynomial pulled = pullback_flat(p, phi);
  for (const auto& [mono, c] : pulled.terms()) {
    const auto& e = mono.exponents();
    ReparamExponent alpha(k, 0);
    for (std::size_t v = phi_base; v < e.size(); ++v) alpha[v - phi_base] = e[v];
    std::vector<std::uint32_t> rest(e.begin(), e.begin() + std::min(phi_base, e.size()));
    grouped[alpha].add_term(Monomial(std::move(rest)), c);
  }
  for (auto& [alpha, flat] : grouped) {
    if (flat.is_zero()) continue;
    if (weighted_degree(alpha) != *m) {
      throw std::logic_error("alpha component with weighted degree different from m");
    }
    out.emplace(alpha, JetPolynomial::from_flat(flat, k, r, n));
  }
  return out;
}

bool is_invariant(const JetPolynomial& p) {
  const auto parts = alpha_decompose(p);
  for (const auto& [alpha, component] : parts) {
    for (std::size_t s = 1; s < alpha.size(); ++s) {
      if (alpha[s] != 0) return false;
    }
  }
  return true;
}

ExtractedInvariant invariant_extract(const JetPolynomial& p) {
  if (p.is_zero()) throw ParameterError("cannot extract an invariant from the zero operator");
  const auto parts = alpha_decompose(p);
  const ReparamExponent* best = nullptr;
  unsigned best_degree = 0;
  // std::map iterates keys in lexicographic order, so strict < keeps the
  // smallest alpha among ties.
  for (const auto& [alpha, component] : parts) {
    unsigned deg = 0;
    for (auto a : alpha) deg += a;
    if (best == nullptr || deg < best_degree) {
      best = &alpha;
      best_degree = deg;
    }
  }
  return ExtractedInvariant{parts.at(*best), best_degree, *best};
}

JetPolynomial total_derivative(const JetPolynomial& p) {
  const unsigned k = p.k(), r = p.r(), n = p.n();
  JetPolynomial out(k + 1, r, n);
  const std::size_t width = static_cast<std::size_t>(k + 1) * r;
  for (const auto& [alpha, a] : p.terms()) {
    JetExponent padded = alpha;
    padded.resize(width, 0);
    // Chain rule on the coefficient: sum_i (da/dz_i) f_i'.
    for (unsigned i = 0; i < r; ++i) {
      Polynomial da = a.derivative(i);
      if (da.is_zero()) continue;
      JetExponent beta = padded;
      beta[i] += 1;
      out.add_term(std::move(beta), da);
    }
    // Product rule on the monomial: f_i^(s) -> f_i^(s+1).
    for (unsigned s = 1; s <= k; ++s) {
      for (unsigned i = 0; i < r; ++i) {
        const auto e = padded[(s - 1) * r + i];
        if (e == 0) continue;
        JetExponent beta = padded;
        beta[(s - 1) * r + i] -= 1;
        beta[s * r + i] += 1;
        out.add_term(std::move(beta), a * Rational(e));
      }
    }
  }
  return out;
}

}  // namespace jetdiff
