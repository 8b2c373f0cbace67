#include "iat/econometrics/threshold.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/math/distributions/chi_squared.hpp>

#include "iat/econometrics/ols.hpp"
#include "iat/error.hpp"
#include "iat/rng.hpp"

namespace iat::econometrics {

namespace {

constexpr Eigen::Index kRegressors = 3;
constexpr std::size_t kMinRegimeObs = kRegressors + 2;
constexpr double kStackedRegressors = 2.0 * kRegressors;

double chi2_1_upper(double stat) {
  if (!std::isfinite(stat)) return 0.0;
  boost::math::chi_squared dist(1.0);
  return boost::math::cdf(boost::math::complement(dist, std::max(stat, 0.0)));
}

// Prefix sums of X'X over observations sorted by z, so that every candidate
// split costs two 3x3 solves.
class GridSearch {
 public:
  GridSearch(const Eigen::MatrixXd& X, const std::vector<double>& z,
             const std::vector<double>& candidates)
      : X_(X), order_(z.size()) {
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return z[a] < z[b]; });
    std::vector<double> z_sorted(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) z_sorted[i] = z[order_[i]];

    prefix_xtx_.assign(z.size() + 1, Eigen::Matrix3d::Zero());
    for (std::size_t i = 0; i < z.size(); ++i) {
      const Eigen::Vector3d row = X_.row(static_cast<Eigen::Index>(order_[i])).transpose();
      prefix_xtx_[i + 1] = prefix_xtx_[i] + row * row.transpose();
    }
    for (double c : candidates) {
      const auto split = static_cast<std::size_t>(
          std::upper_bound(z_sorted.begin(), z_sorted.end(), c) - z_sorted.begin());
      splits_.push_back(split);
    }
  }

  // Index of the SSR-minimizing candidate, or nothing when no candidate
  // leaves both regimes estimable.
  std::optional<std::size_t> best(const Eigen::VectorXd& y, std::vector<std::size_t>* evaluated,
                                  std::vector<double>* profile) const {
    const std::size_t n = order_.size();
    std::vector<Eigen::Vector3d> prefix_xty(n + 1, Eigen::Vector3d::Zero());
    std::vector<double> prefix_yy(n + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const auto row = static_cast<Eigen::Index>(order_[i]);
      prefix_xty[i + 1] = prefix_xty[i] + X_.row(row).transpose() * y(row);
      prefix_yy[i + 1] = prefix_yy[i] + y(row) * y(row);
    }

    std::optional<std::size_t> arg;
    double best_ssr = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < splits_.size(); ++c) {
      const std::size_t s = splits_[c];
      if (s < kMinRegimeObs || n - s < kMinRegimeObs) continue;
      const auto low = regime_ssr(prefix_xtx_[s], prefix_xty[s], prefix_yy[s]);
      const auto high = regime_ssr(prefix_xtx_[n] - prefix_xtx_[s], prefix_xty[n] - prefix_xty[s],
                                   prefix_yy[n] - prefix_yy[s]);
      if (!low || !high) continue;
      const double total = *low + *high;
      if (evaluated) evaluated->push_back(c);
      if (profile) profile->push_back(total);
      if (total < best_ssr) {
        best_ssr = total;
        arg = c;
      }
    }
    return arg;
  }

 private:
  static std::optional<double> regime_ssr(const Eigen::Matrix3d& xtx, const Eigen::Vector3d& xty,
                                          double yy) {
    Eigen::LDLT<Eigen::Matrix3d> ldlt(xtx);
    const Eigen::Vector3d d = ldlt.vectorD().cwiseAbs();
    if (ldlt.info() != Eigen::Success || d.maxCoeff() <= 0.0 ||
        d.minCoeff() <= 1e-12 * d.maxCoeff()) {
      return std::nullopt;
    }
    const Eigen::Vector3d b = ldlt.solve(xty);
    return std::max(0.0, yy - b.dot(xty));
  }

  const Eigen::MatrixXd& X_;
  std::vector<std::size_t> order_;
  std::vector<Eigen::Matrix3d> prefix_xtx_;
  std::vector<std::size_t> splits_;
};

std::vector<double> trimmed_candidates(const std::vector<double>& z, double trim) {
  std::vector<double> u = z;
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  const auto cut = static_cast<std::size_t>(std::floor(trim * static_cast<double>(u.size())));
  if (2 * cut >= u.size()) return {};
  return {u.begin() + static_cast<std::ptrdiff_t>(cut), u.end() - static_cast<std::ptrdiff_t>(cut)};
}

RegimeFit fit_regime(const Eigen::MatrixXd& X, const Eigen::VectorXd& y, double df_scale,
                     Eigen::VectorXd& residuals_out) {
  const OlsResult ols = ols_fit(X, y);
  RegimeFit r;
  r.n = static_cast<std::size_t>(X.rows());
  r.beta0 = ols.coef(0);
  r.beta1 = ols.coef(1);
  r.beta2 = ols.coef(2);
  r.cov = hc_covariance(X, ols.residuals, HcFlavor::HC0) * df_scale;
  if (r.beta1 == 0.0) fail(ErrorCode::Singular, "estimated perceived persistence is zero");
  r.gamma = r.beta2 / r.beta1;
  r.se_gamma = std::sqrt(std::max(0.0, ratio_variance(r.beta1, r.beta2, r.cov)));
  residuals_out = ols.residuals;
  return r;
}

// Fit at a threshold with a caller-provided design and response.
ThresholdFit fit_split(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                       const std::vector<double>& z, double threshold,
                       Eigen::VectorXd* residuals = nullptr) {
  const auto n = static_cast<Eigen::Index>(z.size());
  std::vector<Eigen::Index> lo, hi;
  for (Eigen::Index i = 0; i < n; ++i) (z[static_cast<std::size_t>(i)] <= threshold ? lo : hi).push_back(i);
  if (lo.size() < kMinRegimeObs || hi.size() < kMinRegimeObs) {
    fail(ErrorCode::InsufficientData, "insufficient regime variation");
  }
  const double df_scale = static_cast<double>(n) / (static_cast<double>(n) - kStackedRegressors);

  ThresholdFit fit;
  fit.threshold_hat = threshold;
  Eigen::VectorXd e_lo, e_hi;
  fit.low = fit_regime(X(lo, Eigen::all), y(lo), df_scale, e_lo);
  fit.high = fit_regime(X(hi, Eigen::all), y(hi), df_scale, e_hi);
  fit.ssr = e_lo.squaredNorm() + e_hi.squaredNorm();
  const double var_diff = fit.low.se_gamma * fit.low.se_gamma + fit.high.se_gamma * fit.high.se_gamma;
  const double diff = fit.high.gamma - fit.low.gamma;
  fit.wald_stat = var_diff > 0.0 ? diff * diff / var_diff
                                 : (diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
  fit.wald_p_equal_gamma = chi2_1_upper(fit.wald_stat);
  if (residuals) {
    residuals->resize(n);
    (*residuals)(lo) = e_lo;
    (*residuals)(hi) = e_hi;
  }
  return fit;
}

}  // namespace

void RegressionDataset::validate() const {
  const std::size_t n = y.size();
  require(x_prior.size() == n && x_fe.size() == n && z.size() == n,
          "regression series must have equal length");
  auto finite = [](const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [](double a) { return std::isfinite(a); });
  };
  require(finite(y) && finite(x_prior) && finite(x_fe) && finite(z),
          "regression series contain missing or non-finite values");
}

Eigen::MatrixXd RegressionDataset::design() const {
  const auto n = static_cast<Eigen::Index>(size());
  Eigen::MatrixXd X(n, kRegressors);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    X(i, 0) = 1.0;
    X(i, 1) = x_prior[k];
    X(i, 2) = x_fe[k];
  }
  return X;
}

Eigen::VectorXd RegressionDataset::response() const {
  return Eigen::Map<const Eigen::VectorXd>(y.data(), static_cast<Eigen::Index>(y.size()));
}

double ratio_variance(double beta1, double beta2, const Eigen::Matrix3d& cov) {
  const Eigen::Vector3d grad(0.0, -beta2 / (beta1 * beta1), 1.0 / beta1);
  return grad.dot(cov * grad);
}

ThresholdFit fit_at_threshold(const RegressionDataset& data, double threshold) {
  data.validate();
  return fit_split(data.design(), data.response(), data.z, threshold);
}

ThresholdFit threshold_regression(const RegressionDataset& data, const ThresholdOptions& opts) {
  data.validate();
  require(data.size() >= 30, "threshold regression needs at least 30 observations",
          ErrorCode::InsufficientData);
  require(opts.trim >= 0.0 && opts.trim <= 0.45, "trim must lie in [0, 0.45]");
  require(opts.bootstrap_draws >= 0, "bootstrap_draws must be non-negative");

  std::vector<double> grid = opts.candidates ? *opts.candidates : trimmed_candidates(data.z, opts.trim);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  const Eigen::MatrixXd X = data.design();
  const Eigen::VectorXd y = data.response();
  const GridSearch search(X, data.z, grid);

  std::vector<std::size_t> evaluated;
  std::vector<double> profile;
  const auto arg = search.best(y, &evaluated, &profile);
  if (!arg) fail(ErrorCode::InsufficientData, "insufficient regime variation");

  Eigen::VectorXd residuals;
  ThresholdFit fit = fit_split(X, y, data.z, grid[*arg], &residuals);
  fit.trim = opts.trim;
  fit.ssr_profile = std::move(profile);
  for (std::size_t c : evaluated) fit.candidates.push_back(grid[c]);
  fit.pooled_ssr = ols_fit(X, y).ssr;

  if (opts.bootstrap_draws > 0) {
    // Null model: one pooled regression, heteroskedasticity carried by the
    // unrestricted residuals times N(0,1) multipliers.
    const Eigen::VectorXd fitted_null = X * ols_fit(X, y).coef;
    NormalRng rng(opts.bootstrap_seed);
    int exceed = 0;
    int valid = 0;
    Eigen::VectorXd y_star(y.size());
    for (int b = 0; b < opts.bootstrap_draws; ++b) {
      for (Eigen::Index i = 0; i < y.size(); ++i) y_star(i) = fitted_null(i) + residuals(i) * rng.next();
      const auto star = search.best(y_star, nullptr, nullptr);
      if (!star) continue;
      try {
        const ThresholdFit f = fit_split(X, y_star, data.z, grid[*star]);
        ++valid;
        if (f.wald_stat >= fit.wald_stat) ++exceed;
      } catch (const Error&) {
        continue;
      }
    }
    if (valid > 0) {
      fit.wald_p_bootstrap = (1.0 + exceed) / (1.0 + valid);
      fit.bootstrap_draws = valid;
    }
  }
  return fit;
}

}  // namespace iat::econometrics
