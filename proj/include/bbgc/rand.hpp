#ifndef BBGC_RAND_HPP
#define BBGC_RAND_HPP

#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace bbgc {

/// Seedable random stream. Two handles constructed with the same seed
/// produce identical draw sequences from every kernel in this header,
/// on any platform (mt19937_64 plus explicit inverse-CDF transforms;
/// no implementation-defined <random> distributions are used).
///
/// A handle is confined to one thread; parallel code uses independently
/// seeded handles.
class RngHandle {
 public:
  explicit RngHandle(std::uint64_t seed = 42) : engine_(seed), seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  /// Uniform draw on the open interval (0, 1) with 53-bit resolution.
  double uniform_open() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_;
};

/// Standard normal CDF.
double std_normal_cdf(double x);

/// Standard normal quantile (AS 241 rational approximation, double
/// precision). Inputs are clamped to [1e-15, 1 - 1e-15] so the result
/// is always finite (|result| < 8).
double std_normal_quantile(double p);

/// One N(0,1) draw (inverse-CDF of one uniform).
double draw_standard_normal(RngHandle& rng);

/// Gamma(shape, scale 1) draw, shape > 0. Marsaglia-Tsang.
double draw_gamma(RngHandle& rng, double shape);

/// Chi-square draw with (possibly non-integral) dof > 0.
double draw_chi_squared(RngHandle& rng, double dof);

/// Flat Dirichlet(1,...,1) weights of length n. All weights are strictly
/// positive and sum to 1 within 1e-12.
std::vector<double> dirichlet_flat(RngHandle& rng, std::size_t n);

/// Draw from N(mu, sigma^2) conditioned on the half-open interval (lo, hi].
/// Either bound may be infinite. Uses inverse-CDF sampling in the body of
/// the distribution and exponential rejection when the whole interval lies
/// in a far tail (|z| > 5), where inverse-CDF arithmetic loses precision.
double truncated_normal(RngHandle& rng, double mu, double sigma, double lo,
                        double hi);

/// Wishart(nu, scale) draw via Bartlett decomposition; nu > p - 1,
/// scale symmetric positive definite.
Eigen::MatrixXd wishart(RngHandle& rng, double nu, const Eigen::MatrixXd& scale);

/// Inverse-Wishart(nu, psi) draw: the inverse of a Wishart(nu, psi^{-1})
/// sample, computed through triangular solves of the Bartlett factor so no
/// explicit matrix inverse is formed. Result is symmetric positive definite.
Eigen::MatrixXd inverse_wishart(RngHandle& rng, double nu,
                                const Eigen::MatrixXd& psi);

/// Prior for the latent correlation scale: R* ~ Inv-Wishart(nu0, psi0).
struct PriorConfig {
  double nu0 = 0.0;
  Eigen::MatrixXd psi0;

  /// nu0 = p + 2, psi0 = I_p: proper, with prior mean equal to I_p.
  static PriorConfig standard(int p);

  /// Throws unless nu0 > p - 1 and psi0 is p x p symmetric positive definite.
  void validate(int p) const;
};

}  // namespace bbgc

#endif  // BBGC_RAND_HPP
