#include "iat/econometrics/ols.hpp"

#include <cmath>

#include "iat/error.hpp"

namespace iat::econometrics {

namespace {

constexpr double kMaxCondition = 1e10;

void check_shapes(const Eigen::MatrixXd& X, Eigen::Index n_resid) {
  require(X.rows() == n_resid, "design and residual lengths differ");
  require(X.rows() > X.cols(), "need more observations than regressors",
          ErrorCode::InsufficientData);
}

Eigen::MatrixXd xtx_inverse(const Eigen::MatrixXd& X) {
  const Eigen::MatrixXd xtx = X.transpose() * X;
  return xtx.ldlt().solve(Eigen::MatrixXd::Identity(X.cols(), X.cols()));
}

// X' diag(e^2) X, the lag-0 term of every sandwich here.
Eigen::MatrixXd white_meat(const Eigen::MatrixXd& X, const Eigen::VectorXd& e) {
  const Eigen::MatrixXd weighted = X.array().colwise() * e.array();
  return weighted.transpose() * weighted;
}

Eigen::MatrixXd sandwich(const Eigen::MatrixXd& bread, const Eigen::MatrixXd& meat) {
  return bread * meat * bread;
}

Eigen::VectorXd sqrt_diag(const Eigen::MatrixXd& V) {
  return V.diagonal().cwiseMax(0.0).cwiseSqrt();
}

}  // namespace

OlsResult ols_fit(const Eigen::MatrixXd& X, const Eigen::VectorXd& y) {
  require(X.rows() == y.size(), "design and response lengths differ");
  require(X.cols() > 0, "empty design");
  require(X.rows() > X.cols(), "need more observations than regressors",
          ErrorCode::InsufficientData);
  require(X.allFinite() && y.allFinite(), "non-finite values in regression data");

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
  const auto& R = qr.matrixR();
  const double r_max = std::abs(R(0, 0));
  const double r_min = std::abs(R(X.cols() - 1, X.cols() - 1));
  if (r_max == 0.0 || r_min * kMaxCondition < r_max) fail(ErrorCode::Singular, "singular design");

  OlsResult out;
  out.coef = qr.solve(y);
  out.residuals = y - X * out.coef;
  out.ssr = out.residuals.squaredNorm();
  out.xtx_inv = xtx_inverse(X);
  return out;
}

Eigen::MatrixXd classical_covariance(const Eigen::MatrixXd& X, const Eigen::VectorXd& residuals) {
  check_shapes(X, residuals.size());
  const double s2 = residuals.squaredNorm() / static_cast<double>(X.rows() - X.cols());
  return s2 * xtx_inverse(X);
}

Eigen::MatrixXd hc_covariance(const Eigen::MatrixXd& X, const Eigen::VectorXd& residuals,
                              HcFlavor flavor) {
  check_shapes(X, residuals.size());
  Eigen::MatrixXd V = sandwich(xtx_inverse(X), white_meat(X, residuals));
  if (flavor == HcFlavor::HC1) {
    V *= static_cast<double>(X.rows()) / static_cast<double>(X.rows() - X.cols());
  }
  return V;
}

Eigen::VectorXd hc_robust_se(const Eigen::MatrixXd& X, const Eigen::VectorXd& residuals,
                             HcFlavor flavor) {
  return sqrt_diag(hc_covariance(X, residuals, flavor));
}

Eigen::MatrixXd newey_west_covariance(const Eigen::MatrixXd& X, const Eigen::VectorXd& residuals,
                                      int lags) {
  check_shapes(X, residuals.size());
  require(lags >= 0, "lags must be non-negative");
  Eigen::MatrixXd meat = white_meat(X, residuals);
  const Eigen::Index n = X.rows();
  const Eigen::MatrixXd scores = X.array().colwise() * residuals.array();
  for (int l = 1; l <= lags && l < n; ++l) {
    const double w = 1.0 - static_cast<double>(l) / static_cast<double>(lags + 1);
    const Eigen::MatrixXd gamma =
        scores.bottomRows(n - l).transpose() * scores.topRows(n - l);
    meat += w * (gamma + gamma.transpose());
  }
  return sandwich(xtx_inverse(X), meat);
}

Eigen::VectorXd newey_west_se(const Eigen::MatrixXd& X, const Eigen::VectorXd& residuals,
                              int lags) {
  return sqrt_diag(newey_west_covariance(X, residuals, lags));
}

}  // namespace iat::econometrics
