#pragma once

// Reference computations written against the model equations directly,
// sharing no code with the library's solvers.

#include <cmath>

#include <Eigen/Dense>

#include "iat/model/params.hpp"
#include "iat/model/period.hpp"

namespace oracle {

inline double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

struct PeriodSolution {
  double pi, x, i, e_pi, e_x;
};

// Unknowns (pi, x, i, E pi', E x') from NKPC, Euler, policy rule and the two
// belief updates, solved as one dense 5x5 system. Regime chosen from pi_lag.
inline PeriodSolution dense_period(const iat::model::ModelState& s, iat::model::PolicyRule rule,
                                   const iat::model::ModelParams& p, double mp) {
  using iat::model::PolicyRule;
  const auto& a = p.attention;
  const bool high = s.pi_lag > a.threshold;
  const double g = high ? a.gamma_pi_high : a.gamma_pi_low;
  const double gx = (high && a.gamma_x_high) ? *a.gamma_x_high : a.gamma_x;

  Eigen::Matrix<double, 5, 5> A = Eigen::Matrix<double, 5, 5>::Zero();
  Eigen::Matrix<double, 5, 1> b = Eigen::Matrix<double, 5, 1>::Zero();
  // pi - beta E pi' - kappa x = u
  A(0, 0) = 1.0; A(0, 3) = -p.beta; A(0, 1) = -p.kappa; b(0) = s.u;
  // x - E x' + varphi i - varphi E pi' = varphi r*
  A(1, 1) = 1.0; A(1, 4) = -1.0; A(1, 2) = p.varphi; A(1, 3) = -p.varphi; b(1) = p.varphi * s.rstar;
  const double w = p.lambda_weight / p.kappa;
  switch (rule) {
    case PolicyRule::TaylorSmoothing:
    case PolicyRule::TaylorNoSmoothing: {
      const double rho = rule == PolicyRule::TaylorSmoothing ? p.rho_i : 0.0;
      A(2, 2) = 1.0; A(2, 0) = -(1.0 - rho) * p.phi_pi; A(2, 1) = -(1.0 - rho) * p.phi_x;
      b(2) = rho * s.i_lag + mp;
      break;
    }
    case PolicyRule::OptimalCommitment:
      A(2, 0) = 1.0; A(2, 1) = w; b(2) = w * s.x_lag;
      break;
    case PolicyRule::OptimalDiscretion:
      A(2, 0) = 1.0; A(2, 1) = w;
      break;
    case PolicyRule::StrictTargeting:
      A(2, 0) = 1.0;
      break;
  }
  // E pi' = (1 - g) prior + g pi ; E x' = (1 - gx) prior_x + gx x
  A(3, 3) = 1.0; A(3, 0) = -g; b(3) = (1.0 - g) * s.beliefs.prior_pi;
  A(4, 4) = 1.0; A(4, 1) = -gx; b(4) = (1.0 - gx) * s.beliefs.prior_x;

  const Eigen::Matrix<double, 5, 1> v = A.fullPivLu().solve(b);
  return {v(0), v(1), v(2), v(3), v(4)};
}

}  // namespace oracle
