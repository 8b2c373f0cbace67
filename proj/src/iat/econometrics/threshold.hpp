#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace iat::econometrics {

/// Rows of the expectation-updating regression
///   y = b0 + b1 x_prior + b2 x_fe + e,
/// split by the threshold variable z. All series share one unit (quarterly pp
/// when built from survey data).
struct RegressionDataset {
  std::vector<double> y;        // E_t pi_{t+h}
  std::vector<double> x_prior;  // E_{t-h} pi_t
  std::vector<double> x_fe;     // pi_t - E_{t-h} pi_t
  std::vector<double> z;        // threshold variable, pi_{t-1}

  std::size_t size() const { return y.size(); }
  void validate() const;
  Eigen::MatrixXd design() const;  // [1, x_prior, x_fe]
  Eigen::VectorXd response() const;
};

struct RegimeFit {
  double beta0 = 0.0;
  double beta1 = 0.0;
  double beta2 = 0.0;
  double gamma = 0.0;     // beta2 / beta1
  double se_gamma = 0.0;  // delta method on the robust covariance
  std::size_t n = 0;
  Eigen::Matrix3d cov = Eigen::Matrix3d::Zero();
};

struct ThresholdOptions {
  double trim = 0.15;
  std::optional<std::vector<double>> candidates;  // overrides the trimmed grid
  // Fixed-regressor wild bootstrap of the Wald statistic with the threshold
  // re-estimated in every draw. 0 disables it.
  int bootstrap_draws = 0;
  std::uint64_t bootstrap_seed = 20230901;
};

struct ThresholdFit {
  double threshold_hat = 0.0;  // same unit as z
  RegimeFit low;
  RegimeFit high;
  double ssr = 0.0;
  double pooled_ssr = 0.0;
  double wald_stat = 0.0;
  double wald_p_equal_gamma = 1.0;  // chi2(1) at the estimated threshold
  std::optional<double> wald_p_bootstrap;
  int bootstrap_draws = 0;
  double trim = 0.15;
  std::vector<double> candidates;   // every candidate actually evaluated
  std::vector<double> ssr_profile;  // total SSR per evaluated candidate

  std::size_t n() const { return low.n + high.n; }
};

/// Two-regime least squares with a grid search over thresholds. Regime Low is
/// z <= threshold. Every candidate fits six coefficients (three per regime);
/// candidates leaving fewer than 5 observations in a regime are skipped. The
/// smallest threshold among SSR minimizers wins.
ThresholdFit threshold_regression(const RegressionDataset& data, const ThresholdOptions& opts = {});

/// The regime fit and Wald statistic at a given threshold, with the HC1
/// scaling n/(n-6) of the stacked regression.
ThresholdFit fit_at_threshold(const RegressionDataset& data, double threshold);

/// Delta-method variance of b2/b1 given the covariance of (b0, b1, b2).
double ratio_variance(double beta1, double beta2, const Eigen::Matrix3d& cov);

}  // namespace iat::econometrics
