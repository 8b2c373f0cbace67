#pragma once

#include <Eigen/Dense>

namespace iat::econometrics {

struct OlsResult {
  Eigen::VectorXd coef;
  Eigen::VectorXd residuals;
  double ssr = 0.0;
  Eigen::MatrixXd xtx_inv;  // (X'X)^-1, reused by the sandwich estimators
};

/// Least squares via column-pivoted QR. Requires rows > cols and a design
/// whose condition number (|R_00| / |R_kk|) stays below 1e10; otherwise
/// throws ErrorCode::Singular ("singular design").
OlsResult ols_fit(const Eigen::MatrixXd& X, const Eigen::VectorXd& y);

enum class HcFlavor { HC0, HC1 };

// Homoskedastic s^2 (X'X)^-1.
Eigen::MatrixXd classical_covariance(const Eigen::MatrixXd& X, const Eigen::VectorXd& residuals);

/// White sandwich (X'X)^-1 X' diag(e^2) X (X'X)^-1; HC1 scales by n/(n-k).
Eigen::MatrixXd hc_covariance(const Eigen::MatrixXd& X, const Eigen::VectorXd& residuals,
                              HcFlavor flavor = HcFlavor::HC1);
Eigen::VectorXd hc_robust_se(const Eigen::MatrixXd& X, const Eigen::VectorXd& residuals,
                             HcFlavor flavor = HcFlavor::HC1);

/// Bartlett-kernel HAC with weights 1 - l/(lags+1), no small-sample scaling.
/// lags = 0 reproduces the HC0 sandwich.
Eigen::MatrixXd newey_west_covariance(const Eigen::MatrixXd& X, const Eigen::VectorXd& residuals,
                                      int lags);
Eigen::VectorXd newey_west_se(const Eigen::MatrixXd& X, const Eigen::VectorXd& residuals,
                              int lags);

}  // namespace iat::econometrics
