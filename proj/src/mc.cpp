#include "jetdiff/mc.hpp"

#include "jetdiff/dims.hpp"
#include "jetdiff/morse.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <thread>

namespace jetdiff {

namespace {

// Per-stream accumulator: sums and sums of squares of each statistic.
struct Moments {
  std::vector<double> sum;
  std::vector<double> sum_sq;

  explicit Moments(std::size_t size) : sum(size, 0.0), sum_sq(size, 0.0) {}

  void add(std::size_t i, double x) {
    sum[i] += x;
    sum_sq[i] += x * x;
  }
};

using StreamBody = std::function<void(Engine&, std::uint64_t, Moments&)>;

Moments run_streams(const RngConfig& cfg, std::uint64_t samples, std::size_t stats,
                    const StreamBody& body) {
  if (cfg.streams < 1) throw ParameterError("need at least one stream");
  if (samples < 1) throw ParameterError("need at least one sample");
  std::vector<Moments> parts(cfg.streams, Moments(stats));
  std::vector<std::thread> workers;
  for (unsigned s = 0; s < cfg.streams; ++s) {
    const std::uint64_t count = samples / cfg.streams + (s < samples % cfg.streams ? 1 : 0);
    workers.emplace_back([&, s, count] {
      Engine rng = stream_engine(cfg.seed, s);
      body(rng, count, parts[s]);
    });
  }
  for (auto& w : workers) w.join();
  Moments total(stats);
  for (const auto& part : parts) {
    for (std::size_t i = 0; i < stats; ++i) {
      total.sum[i] += part.sum[i];
      total.sum_sq[i] += part.sum_sq[i];
    }
  }
  return total;
}

double mean(const Moments& m, std::size_t i, std::uint64_t samples) {
  return m.sum[i] / static_cast<double>(samples);
}

double std_error(const Moments& m, std::size_t i, std::uint64_t samples) {
  if (samples < 2) return 0.0;
  const double n = static_cast<double>(samples);
  const double mu = m.sum[i] / n;
  const double var = std::max(0.0, (m.sum_sq[i] - n * mu * mu) / (n - 1));
  return std::sqrt(var / n);
}

}  // namespace

Engine stream_engine(std::uint64_t seed, unsigned stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream)};
  return Engine(seq);
}

std::vector<double> sample_dirichlet(unsigned k, unsigned r, Engine& rng) {
  if (k < 1 || r < 1) throw ParameterError("need k, r >= 1");
  std::gamma_distribution<double> gamma(static_cast<double>(r), 1.0);
  std::vector<double> x(k);
  double total = 0;
  for (auto& v : x) {
    v = gamma(rng);
    total += v;
  }
  for (auto& v : x) v /= total;
  return x;
}

std::vector<std::complex<double>> sample_sphere(unsigned r, Engine& rng) {
  if (r < 1) throw ParameterError("need r >= 1");
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<std::complex<double>> u(r);
  double norm2 = 0;
  for (auto& z : u) {
    z = {normal(rng), normal(rng)};
    norm2 += std::norm(z);
  }
  const double norm = std::sqrt(norm2);
  for (auto& z : u) z /= norm;
  return u;
}

CurvatureTensor::CurvatureTensor(unsigned n, unsigned r)
    : n_(n), r_(r), c_(static_cast<std::size_t>(n) * n * r * r) {
  if (n < 1 || r < 1) throw ParameterError("need n, r >= 1");
}

std::size_t CurvatureTensor::offset(unsigned i, unsigned j, unsigned a, unsigned b) const {
  if (i >= n_ || j >= n_ || a >= r_ || b >= r_) throw ParameterError("tensor index out of range");
  return ((static_cast<std::size_t>(i) * n_ + j) * r_ + a) * r_ + b;
}

std::complex<double>& CurvatureTensor::at(unsigned i, unsigned j, unsigned a, unsigned b) {
  return c_[offset(i, j, a, b)];
}

const std::complex<double>& CurvatureTensor::at(unsigned i, unsigned j, unsigned a,
                                                unsigned b) const {
  return c_[offset(i, j, a, b)];
}

bool CurvatureTensor::is_hermitian(double tol) const {
  for (unsigned i = 0; i < n_; ++i)
    for (unsigned j = 0; j < n_; ++j)
      for (unsigned a = 0; a < r_; ++a)
        for (unsigned b = 0; b < r_; ++b)
          if (std::abs(at(i, j, a, b) - std::conj(at(j, i, b, a))) > tol) return false;
  return true;
}

ComplexMatrix CurvatureTensor::trace() const {
  ComplexMatrix eta(n_, std::vector<std::complex<double>>(n_));
  for (unsigned i = 0; i < n_; ++i)
    for (unsigned j = 0; j < n_; ++j)
      for (unsigned a = 0; a < r_; ++a) eta[i][j] += at(i, j, a, a);
  return eta;
}

CurvatureTensor identity_tensor(unsigned n, unsigned r) {
  CurvatureTensor t(n, r);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned a = 0; a < r; ++a) t.at(i, i, a, a) = 1.0;
  return t;
}

CurvatureTensor random_hermitian_tensor(unsigned n, unsigned r, std::uint64_t seed) {
  CurvatureTensor t(n, r);
  Engine rng = stream_engine(seed, 0);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      for (unsigned a = 0; a < r; ++a)
        for (unsigned b = 0; b < r; ++b) {
          // Visit each pair {(i,j,a,b), (j,i,b,a)} once, from its smaller key.
          if (std::make_pair(i * r + a, j * r + b) > std::make_pair(j * r + b, i * r + a)) continue;
          if (i == j && a == b) {
            t.at(i, j, a, b) = unif(rng);
          } else {
            const std::complex<double> z{unif(rng), unif(rng)};
            t.at(i, j, a, b) = z;
            t.at(j, i, b, a) = std::conj(z);
          }
        }
  return t;
}

double z_score(double mc, double exact, double std_error) {
  const double diff = std::abs(mc - exact);
  // Differences at rounding level count as agreement even when the sample
  // variance is itself only rounding noise.
  if (diff <= 1e-12 * std::max(1.0, std::abs(exact))) return 0.0;
  if (std_error > 0) return diff / std_error;
  return std::numeric_limits<double>::infinity();
}

GkEstimate estimate_gk_expectation(const CurvatureTensor& theta, unsigned k, std::uint64_t samples,
                                   const RngConfig& cfg, double z_max) {
  if (k < 1) throw ParameterError("need k >= 1");
  const unsigned n = theta.n(), r = theta.r();
  // Upper triangle i <= j, real and imaginary parts.
  std::vector<std::pair<unsigned, unsigned>> slots;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i; j < n; ++j) slots.emplace_back(i, j);
  const std::size_t stats = 2 * slots.size();

  const Moments m = run_streams(cfg, samples, stats, [&](Engine& rng, std::uint64_t count,
                                                         Moments& acc) {
    std::vector<std::vector<std::complex<double>>> u(k);
    for (std::uint64_t t = 0; t < count; ++t) {
      const std::vector<double> x = sample_dirichlet(k, r, rng);
      for (unsigned s = 0; s < k; ++s) u[s] = sample_sphere(r, rng);
      for (std::size_t q = 0; q < slots.size(); ++q) {
        const auto [i, j] = slots[q];
        std::complex<double> g = 0;
        for (unsigned s = 0; s < k; ++s) {
          std::complex<double> inner = 0;
          for (unsigned a = 0; a < r; ++a)
            for (unsigned b = 0; b < r; ++b) inner += theta.at(i, j, a, b) * u[s][a] * std::conj(u[s][b]);
          g += (x[s] / (s + 1)) * inner;
        }
        acc.add(2 * q, g.real());
        // Diagonal entries are real; drop the rounding residue.
        acc.add(2 * q + 1, i == j ? 0.0 : g.imag());
      }
    }
  });

  GkEstimate est;
  const ComplexMatrix eta = theta.trace();
  const double scale = harmonic(k).get_d() / (static_cast<double>(k) * r);
  est.mean.assign(n, std::vector<std::complex<double>>(n));
  est.std_error = est.mean;
  est.expected = est.mean;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) est.expected[i][j] = scale * eta[i][j];
  for (std::size_t q = 0; q < slots.size(); ++q) {
    const auto [i, j] = slots[q];
    const std::complex<double> mu{mean(m, 2 * q, samples), mean(m, 2 * q + 1, samples)};
    const std::complex<double> se{std_error(m, 2 * q, samples), std_error(m, 2 * q + 1, samples)};
    est.mean[i][j] = mu;
    est.std_error[i][j] = se;
    if (i != j) {
      est.mean[j][i] = std::conj(mu);
      est.std_error[j][i] = se;
    }
    const double z = std::max(z_score(mu.real(), est.expected[i][j].real(), se.real()),
                              z_score(mu.imag(), est.expected[i][j].imag(), se.imag()));
    est.max_abs_z = std::max(est.max_abs_z, z);
  }
  est.passed = est.max_abs_z <= z_max;
  return est;
}

MomentReport verify_simplex_moment(const std::vector<unsigned>& e, unsigned k, unsigned r,
                                   std::uint64_t samples, const RngConfig& cfg, double z_max) {
  if (e.size() > k) throw ParameterError("more exponents than simplex coordinates");
  MomentReport rep;
  rep.exact = nu_moment(k, r, e);
  const Moments m = run_streams(cfg, samples, 1, [&](Engine& rng, std::uint64_t count,
                                                     Moments& acc) {
    for (std::uint64_t t = 0; t < count; ++t) {
      const std::vector<double> x = sample_dirichlet(k, r, rng);
      double v = 1.0;
      for (std::size_t s = 0; s < e.size(); ++s) v *= std::pow(x[s], static_cast<double>(e[s]));
      acc.add(0, v);
    }
  });
  rep.mc = mean(m, 0, samples);
  rep.std_error = std_error(m, 0, samples);
  rep.z = z_score(rep.mc, rep.exact.get_d(), rep.std_error);
  rep.passed = rep.z <= z_max;
  return rep;
}

MomentReport verify_sphere_moment(unsigned r, unsigned a, unsigned b, std::uint64_t samples,
                                  const RngConfig& cfg, double z_max) {
  if (a >= r || b >= r) throw ParameterError("sphere coordinate out of range");
  MomentReport rep;
  rep.exact = a == b ? Rational(BigInt(1), BigInt(r)) : Rational(0);
  const Moments m = run_streams(cfg, samples, 2, [&](Engine& rng, std::uint64_t count,
                                                     Moments& acc) {
    for (std::uint64_t t = 0; t < count; ++t) {
      const auto u = sample_sphere(r, rng);
      const std::complex<double> v = u[a] * std::conj(u[b]);
      acc.add(0, v.real());
      acc.add(1, v.imag());
    }
  });
  rep.mc = mean(m, 0, samples);
  rep.std_error = std_error(m, 0, samples);
  const double z_im = z_score(mean(m, 1, samples), 0.0, std_error(m, 1, samples));
  rep.z = std::max(z_score(rep.mc, rep.exact.get_d(), rep.std_error), z_im);
  rep.passed = rep.z <= z_max;
  return rep;
}

}  // namespace jetdiff
