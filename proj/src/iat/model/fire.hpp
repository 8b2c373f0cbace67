#pragma once

#include <Eigen/Dense>

#include "iat/model/params.hpp"
#include "iat/model/period.hpp"

namespace iat::model {

using FireState = Eigen::Matrix<double, 5, 1>;  // (i_lag, x_lag, u, r*, mp)

/// Linear rational-expectations decision rules v_t = P s_t with
/// v = (pi, x, i). Columns that the rule does not need (i_lag without
/// smoothing, x_lag outside commitment) come out as zeros.
struct FirePolicy {
  PolicyRule rule = PolicyRule::TaylorSmoothing;
  Eigen::Matrix<double, 3, 5> P = Eigen::Matrix<double, 3, 5>::Zero();
  Eigen::Matrix<double, 2, 5> expectations = Eigen::Matrix<double, 2, 5>::Zero();  // E_t (pi, x)_{t+1}
  double residual_norm = 0.0;
  double spectral_radius = 0.0;  // of the endogenous (i_lag, x_lag) block
  int iterations = 0;

  Eigen::Vector3d decide(const FireState& s) const { return P * s; }
};

FireState fire_state(const ModelState& s, double mp = 0.0);

/// Time iteration on the undetermined coefficients until successive
/// iterates agree to 1e-13, then a residual audit over 100 random states.
/// Throws ErrorCode::Explosive ("indeterminacy or explosiveness") when the
/// iteration fails within 10,000 steps or the result is not stable.
FirePolicy solve_fire_policy(PolicyRule rule, const ModelParams& p);

/// Largest absolute residual of NKPC, Euler and the policy rule at state s.
double fire_residual(const FirePolicy& f, const ModelParams& p, const FireState& s);

PeriodOutcome solve_period_fire(const FirePolicy& f, const ModelState& s, const ModelParams& p,
                                double mp = 0.0);

}  // namespace iat::model
