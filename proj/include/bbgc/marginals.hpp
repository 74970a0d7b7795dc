#ifndef BBGC_MARGINALS_HPP
#define BBGC_MARGINALS_HPP

#include <vector>

#include "bbgc/rand.hpp"

namespace bbgc {

enum class MarginalStatus {
  ok,
  too_few_observed,  // fewer than 2 observed cells
  constant,          // a single distinct observed value
};

/// One Bayesian-bootstrap realization of a column's marginal distribution:
/// weighted atoms at the distinct observed values, evaluable as an adjusted
/// CDF and as a generalized inverse.
///
/// The adjusted CDF is F~(t) = adjustment * sum_i w_i I(x_i <= t) with
/// adjustment = n_obs / (n_obs + 1), so F~ never reaches 1 and the latent
/// transform Phi^{-1}(F~(x)) stays finite.
class MarginalDraw {
 public:
  /// Builds a draw from per-observation weights; weights of tied values are
  /// merged onto one support atom. Weights must be positive and sum to 1.
  static MarginalDraw from_values_weights(const std::vector<double>& values,
                                          const std::vector<double>& weights);

  /// Adjusted CDF, right-continuous step evaluation; t below the minimum
  /// support returns 0. Range is [0, n_obs/(n_obs+1)].
  double cdf(double t) const;

  /// Generalized inverse: the smallest support value whose adjusted
  /// cumulative weight is >= u. u above n_obs/(n_obs+1) clamps to the
  /// observed maximum. Throws for u outside [0, 1].
  double quantile(double u) const;

  MarginalStatus status() const { return status_; }
  bool degenerate() const { return status_ != MarginalStatus::ok; }

  int n_obs() const { return n_obs_; }
  double adjustment() const { return adjustment_; }
  const std::vector<double>& support() const { return support_; }
  /// Unadjusted cumulative weights per support atom; final entry is 1.
  const std::vector<double>& cum_weights() const { return cum_weights_; }

 private:
  friend MarginalDraw draw_marginal(RngHandle&, const std::vector<double>&);
  friend MarginalDraw ecdf_marginal(const std::vector<double>&);
  MarginalDraw() = default;

  std::vector<double> support_;
  std::vector<double> cum_weights_;
  double adjustment_ = 0.0;
  int n_obs_ = 0;
  MarginalStatus status_ = MarginalStatus::ok;
};

/// Bayesian-bootstrap marginal: Dirichlet(1,...,1) weights over the observed
/// values. Degenerate inputs are flagged, not thrown (see MarginalStatus).
MarginalDraw draw_marginal(RngHandle& rng, const std::vector<double>& observed);

/// Uniform-weight special case: coincides with the (adjusted) empirical CDF.
MarginalDraw ecdf_marginal(const std::vector<double>& observed);

/// Latent-scale thresholds for the ordinal columns. by_column[j] is empty
/// for continuous columns, else has levels+1 entries with by_column[j][0]
/// = -inf and by_column[j][levels] = +inf.
struct CutoffSet {
  std::vector<std::vector<double>> by_column;
};

/// Thresholds s_0 = -inf < s_1 <= ... <= s_{levels-1} < s_levels = +inf
/// with s_l = Phi^{-1}(F~(l)): the category-l mass of the marginal mapped
/// onto the latent Gaussian scale. A category with no observed mass yields
/// two equal cutoffs (its interval is empty and is never selected).
std::vector<double> latent_cutoffs(const MarginalDraw& m, int levels);

/// Pointwise credible band of the adjusted Bayesian-bootstrap CDF over the
/// column's distinct observed values.
struct CredibleBand {
  std::vector<double> grid;   // distinct observed values, ascending
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<double> ecdf;   // adjusted empirical CDF at the grid
  double level = 0.0;
};

/// n_draws Bayesian-bootstrap realizations; lower/upper are the (1-level)/2
/// and 1-(1-level)/2 empirical quantiles of the draws at each grid point.
/// level = 1 degenerates to the min/max envelope of the draws.
CredibleBand credible_band(RngHandle& rng, const std::vector<double>& column,
                           int n_draws, double level);

}  // namespace bbgc

#endif  // BBGC_MARGINALS_HPP
