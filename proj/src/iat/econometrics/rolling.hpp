#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "iat/econometrics/threshold.hpp"

namespace iat::econometrics {

// Per-window attention estimates. Inflation columns are annualized percent.
struct RollingAttentionSeries {
  std::vector<std::string> window_end_dates;
  std::vector<std::optional<double>> gamma_hat;  // clamped to [0,1]; empty if singular
  std::vector<std::optional<double>> gamma_raw;
  std::vector<double> mean_inflation;
  std::vector<double> lagged_inflation;

  std::size_t size() const { return gamma_hat.size(); }
};

/// Fits the single-regime updating regression on every run of `window_len`
/// consecutive rows. `dates` labels the rows of `data` (may be empty).
RollingAttentionSeries rolling_window_attention(const RegressionDataset& data,
                                                const std::vector<std::string>& dates,
                                                int window_len = 12);

enum class WithinVariant { MeanInflation, LaggedInflation };

struct WithinRegimeResult {
  Eigen::Vector4d coef = Eigen::Vector4d::Zero();  // delta_0..delta_3
  Eigen::Vector4d se = Eigen::Vector4d::Zero();    // Newey-West
  std::size_t n_windows = 0;
  std::size_t n_high = 0;
  int nw_lags = 12;
};

/// gamma_hat on {1, 1[mean >= c], v, 1[v >= c] v} where v is the window mean
/// (MeanInflation) or the lagged inflation at the window end
/// (LaggedInflation); the level indicator always uses the window mean.
/// `threshold` is annualized percent.
WithinRegimeResult within_regime_regression(const RollingAttentionSeries& series,
                                            double threshold = 4.0,
                                            WithinVariant variant = WithinVariant::MeanInflation,
                                            int nw_lags = 12);

}  // namespace iat::econometrics
