#include "bbgc/rand.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace bbgc {

namespace {

constexpr double kQuantileClamp = 1e-15;
constexpr double kTailCut = 5.0;  // beyond this, inverse-CDF truncation degrades

// Wichura's AS 241 (PPND16) rational approximation to the standard normal
// quantile; absolute error below 1e-15 on the clamped domain.
double ppnd16(double p) {
  const double q = p - 0.5;
  if (std::fabs(q) <= 0.425) {
    const double r = 0.180625 - q * q;
    const double num =
        (((((((2.5090809287301226727e+3 * r + 3.3430575583588128105e+4) * r +
              6.7265770927008700853e+4) * r + 4.5921953931549871457e+4) * r +
            1.3731693765509461125e+4) * r + 1.9715909503065514427e+3) * r +
          1.3314166789178437745e+2) * r + 3.3871328727963666080e+0);
    const double den =
        (((((((5.2264952788528545610e+3 * r + 2.8729085735721942674e+4) * r +
              3.9307895800092710610e+4) * r + 2.1213794301586595867e+4) * r +
            5.3941960214247511077e+3) * r + 6.8718700749205790830e+2) * r +
          4.2313330701600911252e+1) * r + 1.0);
    return q * num / den;
  }
  double r = (q < 0.0) ? p : 1.0 - p;
  r = std::sqrt(-std::log(r));
  double val;
  if (r <= 5.0) {
    r -= 1.6;
    const double num =
        (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
              2.41780725177450611770e-1) * r + 1.27045825245236838258e+0) * r +
            3.64784832476320460504e+0) * r + 5.76949722146069140550e+0) * r +
          4.63033784615654529590e+0) * r + 1.42343711074968357734e+0);
    const double den =
        (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
              1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
            6.89767334985100004550e-1) * r + 1.67638483018380384940e+0) * r +
          2.05319162663775882187e+0) * r + 1.0);
    val = num / den;
  } else {
    r -= 5.0;
    const double num =
        (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
              1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
            2.96560571828504891230e-1) * r + 1.78482653991729133580e+0) * r +
          5.46378491116411436990e+0) * r + 6.65790464350110377720e+0);
    const double den =
        (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
              1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
            1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
          5.99832206555887937690e-1) * r + 1.0);
    val = num / den;
  }
  return (q < 0.0) ? -val : val;
}

// Exponential-rejection draw from the standard normal restricted to (a, b],
// for intervals entirely in the upper tail (a > 0). Robert (1995) proposal,
// with the exponential itself truncated to (0, b - a] so narrow intervals
// keep a high acceptance rate.
double upper_tail_normal(RngHandle& rng, double a, double b) {
  const double lambda = 0.5 * (a + std::sqrt(a * a + 4.0));
  const double width = b - a;  // may be +inf
  for (;;) {
    const double u = rng.uniform_open();
    double e;
    if (std::isinf(width)) {
      e = -std::log1p(-u) / lambda;
    } else {
      e = -std::log1p(u * std::expm1(-lambda * width)) / lambda;
    }
    const double x = a + e;
    const double d = x - lambda;
    if (rng.uniform_open() <= std::exp(-0.5 * d * d)) return x;
  }
}

}  // namespace

double std_normal_cdf(double x) {
  return 0.5 * std::erfc(-x * M_SQRT1_2);
}

double std_normal_quantile(double p) {
  if (std::isnan(p)) throw std::invalid_argument("std_normal_quantile: NaN input");
  if (p < kQuantileClamp) p = kQuantileClamp;
  if (p > 1.0 - kQuantileClamp) p = 1.0 - kQuantileClamp;
  return ppnd16(p);
}

double draw_standard_normal(RngHandle& rng) {
  return ppnd16(rng.uniform_open());
}

double draw_gamma(RngHandle& rng, double shape) {
  if (!(shape > 0.0)) throw std::invalid_argument("draw_gamma: shape must be > 0");
  if (shape < 1.0) {
    // Boost the shape, then scale back (Marsaglia-Tsang, section 5).
    const double g = draw_gamma(rng, shape + 1.0);
    return g * std::pow(rng.uniform_open(), 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    const double x = draw_standard_normal(rng);
    const double t = 1.0 + c * x;
    if (t <= 0.0) continue;
    const double v = t * t * t;
    const double u = rng.uniform_open();
    if (std::log(u) < 0.5 * x * x + d - d * v + d * std::log(v)) return d * v;
  }
}

double draw_chi_squared(RngHandle& rng, double dof) {
  return 2.0 * draw_gamma(rng, 0.5 * dof);
}

std::vector<double> dirichlet_flat(RngHandle& rng, std::size_t n) {
  if (n == 0) throw std::invalid_argument("dirichlet_flat: n must be >= 1");
  std::vector<double> w(n);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = -std::log(rng.uniform_open());  // Exp(1), strictly positive
    total += w[i];
  }
  for (double& wi : w) wi /= total;
  return w;
}

double truncated_normal(RngHandle& rng, double mu, double sigma, double lo,
                        double hi) {
  if (!(sigma > 0.0)) throw std::invalid_argument("truncated_normal: sigma must be > 0");
  if (!(lo < hi)) throw std::invalid_argument("truncated_normal: requires lo < hi");

  const double a = std::isinf(lo) ? lo : (lo - mu) / sigma;
  const double b = std::isinf(hi) ? hi : (hi - mu) / sigma;

  double z;
  if (a >= kTailCut) {
    z = upper_tail_normal(rng, a, b);
  } else if (b <= -kTailCut) {
    z = -upper_tail_normal(rng, -b, -a);
  } else {
    const double pa = std::isinf(a) ? 0.0 : std_normal_cdf(a);
    const double pb = std::isinf(b) ? 1.0 : std_normal_cdf(b);
    const double u = rng.uniform_open();
    z = std_normal_quantile(pa + u * (pb - pa));
  }

  double x = mu + sigma * z;
  // Rounding may push the draw onto or past a bound; the contract is (lo, hi].
  if (x > hi) x = hi;
  if (x <= lo) x = std::nextafter(lo, hi);
  return x;
}

Eigen::MatrixXd wishart(RngHandle& rng, double nu, const Eigen::MatrixXd& scale) {
  const int p = static_cast<int>(scale.rows());
  if (scale.cols() != p || p < 1) throw std::invalid_argument("wishart: scale must be square");
  if (!(nu > p - 1)) throw std::invalid_argument("wishart: requires nu > p - 1");

  Eigen::LLT<Eigen::MatrixXd> llt(scale);
  if (llt.info() != Eigen::Success)
    throw std::invalid_argument("wishart: scale matrix is not positive definite");

  Eigen::MatrixXd bart = Eigen::MatrixXd::Zero(p, p);
  for (int i = 0; i < p; ++i) {
    bart(i, i) = std::sqrt(draw_chi_squared(rng, nu - i));
    for (int j = 0; j < i; ++j) bart(i, j) = draw_standard_normal(rng);
  }

  const Eigen::MatrixXd t = llt.matrixL() * bart;
  Eigen::MatrixXd w = t * t.transpose();
  w = 0.5 * (w + w.transpose()).eval();
  return w;
}

Eigen::MatrixXd inverse_wishart(RngHandle& rng, double nu,
                                const Eigen::MatrixXd& psi) {
  const int p = static_cast<int>(psi.rows());
  if (psi.cols() != p || p < 1) throw std::invalid_argument("inverse_wishart: psi must be square");
  if (!(nu > p - 1)) throw std::invalid_argument("inverse_wishart: requires nu > p - 1");

  Eigen::LLT<Eigen::MatrixXd> llt(psi);
  if (llt.info() != Eigen::Success)
    throw std::invalid_argument("inverse_wishart: psi is not positive definite");

  Eigen::MatrixXd bart = Eigen::MatrixXd::Zero(p, p);
  for (int i = 0; i < p; ++i) {
    bart(i, i) = std::sqrt(draw_chi_squared(rng, nu - i));
    for (int j = 0; j < i; ++j) bart(i, j) = draw_standard_normal(rng);
  }

  // W = B (A A') B' with B = L^{-T}, so W^{-1} = (A^{-1} L')' (A^{-1} L').
  const Eigen::MatrixXd lt = llt.matrixL().transpose();
  const Eigen::MatrixXd k =
      bart.triangularView<Eigen::Lower>().solve(lt);
  Eigen::MatrixXd x = k.transpose() * k;
  x = 0.5 * (x + x.transpose()).eval();
  return x;
}

PriorConfig PriorConfig::standard(int p) {
  PriorConfig c;
  c.nu0 = static_cast<double>(p) + 2.0;
  c.psi0 = Eigen::MatrixXd::Identity(p, p);
  return c;
}

void PriorConfig::validate(int p) const {
  if (psi0.rows() != p || psi0.cols() != p)
    throw std::invalid_argument("PriorConfig: psi0 must be p x p");
  if (!(nu0 > p - 1)) throw std::invalid_argument("PriorConfig: requires nu0 > p - 1");
  if (!psi0.isApprox(psi0.transpose(), 1e-10))
    throw std::invalid_argument("PriorConfig: psi0 must be symmetric");
  Eigen::LLT<Eigen::MatrixXd> llt(psi0);
  if (llt.info() != Eigen::Success)
    throw std::invalid_argument("PriorConfig: psi0 must be positive definite");
}

}  // namespace bbgc
