#pragma once

#include "jetdiff/rational.hpp"

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace jetdiff {

/// Samples are split over `streams` independent generators seeded from
/// (seed, stream index); per-stream sums are merged in stream order, so the
/// result depends on (seed, streams) only.
struct RngConfig {
  std::uint64_t seed = 42;
  unsigned streams = 4;
};

using Engine = std::mt19937_64;

Engine stream_engine(std::uint64_t seed, unsigned stream);

/// A point of the simplex drawn from the symmetric Dirichlet law with
/// concentration r (density proportional to (x_1...x_k)^{r-1}).
std::vector<double> sample_dirichlet(unsigned k, unsigned r, Engine& rng);

/// A uniform point of the unit sphere in C^r.
std::vector<std::complex<double>> sample_sphere(unsigned r, Engine& rng);

using ComplexMatrix = std::vector<std::vector<std::complex<double>>>;

/// Coefficients c_{ij alpha beta}, i, j < n and alpha, beta < r.
class CurvatureTensor {
 public:
  CurvatureTensor(unsigned n, unsigned r);

  unsigned n() const { return n_; }
  unsigned r() const { return r_; }
  std::complex<double>& at(unsigned i, unsigned j, unsigned a, unsigned b);
  const std::complex<double>& at(unsigned i, unsigned j, unsigned a, unsigned b) const;

  /// c_{ij ab} = conj(c_{ji ba}) within tol.
  bool is_hermitian(double tol = 1e-12) const;

  /// eta_ij = sum_a c_{ij aa}.
  ComplexMatrix trace() const;

 private:
  std::size_t offset(unsigned i, unsigned j, unsigned a, unsigned b) const;
  unsigned n_;
  unsigned r_;
  std::vector<std::complex<double>> c_;
};

/// c_{ij ab} = delta_ij delta_ab.
CurvatureTensor identity_tensor(unsigned n, unsigned r);

/// Hermitian tensor with entries drawn from the given seed: the diagonal
/// (i = j, a = b) real, the rest paired by c_{ij ab} = conj(c_{ji ba}).
CurvatureTensor random_hermitian_tensor(unsigned n, unsigned r, std::uint64_t seed);

struct GkEstimate {
  ComplexMatrix mean;
  ComplexMatrix std_error;  // real and imaginary parts separately
  ComplexMatrix expected;   // (H_k / kr) eta
  double max_abs_z = 0;
  bool passed = false;
};

/// Monte Carlo mean of the coefficient matrix of
///   g_k(x, u) = sum_s (x_s/s) sum c_{ij ab} u_{s a} conj(u_{s b})
/// under nu_{k,r} x mu^k, compared against (H_k/kr) eta.
GkEstimate estimate_gk_expectation(const CurvatureTensor& theta, unsigned k, std::uint64_t samples,
                                   const RngConfig& cfg, double z_max = 3.0);

struct MomentReport {
  double mc = 0;
  Rational exact;
  double std_error = 0;
  double z = 0;
  bool passed = false;
};

/// E[prod x_s^{e_s}] under nu_{k,r} against the exact moment.
MomentReport verify_simplex_moment(const std::vector<unsigned>& e, unsigned k, unsigned r,
                                   std::uint64_t samples, const RngConfig& cfg,
                                   double z_max = 3.0);

/// E[u_a conj(u_b)] on the unit sphere of C^r against delta_ab / r; the
/// z-score is the larger of the real and imaginary ones.
MomentReport verify_sphere_moment(unsigned r, unsigned a, unsigned b, std::uint64_t samples,
                                  const RngConfig& cfg, double z_max = 3.0);

/// |mc - exact| / se; 0 when the difference is at rounding level, infinite
/// when se = 0 and the difference is not.
double z_score(double mc, double exact, double std_error);

}  // namespace jetdiff
