#include "iat/econometrics/rolling.hpp"

#include <algorithm>

#include "iat/econometrics/ols.hpp"
#include "iat/error.hpp"
#include "iat/units.hpp"

namespace iat::econometrics {

RollingAttentionSeries rolling_window_attention(const RegressionDataset& data,
                                                const std::vector<std::string>& dates,
                                                int window_len) {
  data.validate();
  require(window_len >= 6, "window_len must be at least 6");
  require(dates.empty() || dates.size() == data.size(), "dates must label every regression row");
  const auto w = static_cast<std::size_t>(window_len);
  require(data.size() >= w, "fewer rows than one window", ErrorCode::InsufficientData);

  const Eigen::MatrixXd X = data.design();
  const Eigen::VectorXd y = data.response();
  RollingAttentionSeries out;
  for (std::size_t end = w - 1; end < data.size(); ++end) {
    const std::size_t start = end + 1 - w;
    const auto s = static_cast<Eigen::Index>(start);
    const auto len = static_cast<Eigen::Index>(w);

    double mean_pi = 0.0;
    for (std::size_t t = start; t <= end; ++t) mean_pi += data.x_prior[t] + data.x_fe[t];
    mean_pi /= static_cast<double>(w);

    std::optional<double> raw;
    try {
      const OlsResult ols = ols_fit(X.middleRows(s, len), y.segment(s, len));
      if (ols.coef(1) != 0.0) raw = ols.coef(2) / ols.coef(1);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Singular) throw;
    }

    out.window_end_dates.push_back(dates.empty() ? std::to_string(end) : dates[end]);
    out.gamma_raw.push_back(raw);
    out.gamma_hat.push_back(raw ? std::optional<double>(std::clamp(*raw, 0.0, 1.0)) : std::nullopt);
    out.mean_inflation.push_back(units::annualize(mean_pi));
    out.lagged_inflation.push_back(units::annualize(data.z[end]));
  }
  return out;
}

WithinRegimeResult within_regime_regression(const RollingAttentionSeries& series, double threshold,
                                            WithinVariant variant, int nw_lags) {
  require(nw_lags >= 0, "Newey-West lags must be non-negative");
  std::vector<Eigen::Index> rows;
  for (std::size_t i = 0; i < series.size(); ++i) {
    if (series.gamma_hat[i]) rows.push_back(static_cast<Eigen::Index>(i));
  }
  require(rows.size() >= 30, "within-regime regression needs at least 30 windows",
          ErrorCode::InsufficientData);

  const auto n = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXd X(n, 4);
  Eigen::VectorXd y(n);
  std::size_t n_high = 0;
  for (Eigen::Index r = 0; r < n; ++r) {
    const auto i = static_cast<std::size_t>(rows[static_cast<std::size_t>(r)]);
    const double level = series.mean_inflation[i];
    const double v = variant == WithinVariant::MeanInflation ? level : series.lagged_inflation[i];
    const double high = level >= threshold ? 1.0 : 0.0;
    n_high += high > 0.0 ? 1 : 0;
    X.row(r) << 1.0, high, v, high * v;
    y(r) = *series.gamma_hat[i];
  }
  require(n_high > 0, "no high-regime windows", ErrorCode::InsufficientData);

  const OlsResult ols = ols_fit(X, y);
  WithinRegimeResult res;
  res.coef = ols.coef;
  res.se = newey_west_se(X, ols.residuals, nw_lags);
  res.n_windows = rows.size();
  res.n_high = n_high;
  res.nw_lags = nw_lags;
  return res;
}

}  // namespace iat::econometrics
