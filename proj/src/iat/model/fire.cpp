#include "iat/model/fire.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "iat/error.hpp"
#include "iat/rng.hpp"

namespace iat::model {

namespace {

using Mat35 = Eigen::Matrix<double, 3, 5>;
using Mat55 = Eigen::Matrix<double, 5, 5>;
using Mat53 = Eigen::Matrix<double, 5, 3>;

constexpr int kMaxIterations = 10000;
constexpr double kTolerance = 1e-13;
constexpr double kResidualLimit = 1e-10;
constexpr int kAuditStates = 100;

// s' = A s + B v
Mat55 exogenous_transition(const ModelParams& p) {
  Mat55 A = Mat55::Zero();
  A(2, 2) = p.rho_u;
  A(3, 3) = p.rho_r;
  return A;
}

Mat53 endogenous_loading() {
  Mat53 B = Mat53::Zero();
  B(0, 2) = 1.0;  // i_lag' = i
  B(1, 1) = 1.0;  // x_lag' = x
  return B;
}

// Policy-rule row: m . v = n . s
void rule_row(PolicyRule rule, const ModelParams& p, Eigen::RowVector3d& m,
              Eigen::Matrix<double, 1, 5>& n) {
  n.setZero();
  const double rho = effective_rho_i(rule, p);
  const double w = p.lambda_weight / p.kappa;
  switch (rule) {
    case PolicyRule::TaylorSmoothing:
    case PolicyRule::TaylorNoSmoothing:
      m << -(1.0 - rho) * p.phi_pi, -(1.0 - rho) * p.phi_x, 1.0;
      n(0) = rho;
      n(4) = 1.0;
      break;
    case PolicyRule::OptimalCommitment:
      m << 1.0, w, 0.0;
      n(1) = w;
      break;
    case PolicyRule::OptimalDiscretion:
      m << 1.0, w, 0.0;
      break;
    case PolicyRule::StrictTargeting:
      m << 1.0, 0.0, 0.0;
      break;
  }
}

[[noreturn]] void unstable(const std::string& detail) {
  fail(ErrorCode::Explosive, "indeterminacy or explosiveness: " + detail);
}

// Blanchard-Kahn count for Taylor rules on w = (i_lag, x_lag, pi, x):
// A E w' = B w with two predetermined and two forward-looking entries.
void check_root_count(PolicyRule rule, const ModelParams& p) {
  const double rho = effective_rho_i(rule, p);
  const double a = (1.0 - rho) * p.phi_pi;
  const double b = (1.0 - rho) * p.phi_x;
  Eigen::Matrix4d A = Eigen::Matrix4d::Identity();
  A(2, 2) = p.beta;
  A(3, 2) = p.varphi;
  Eigen::Matrix4d B;
  B << rho, 0.0, a, b,
       0.0, 0.0, 0.0, 1.0,
       0.0, 0.0, 1.0, -p.kappa,
       p.varphi * rho, 0.0, p.varphi * a, 1.0 + p.varphi * b;
  const Eigen::Matrix4d M = A.inverse() * B;
  const Eigen::Vector4d mod = M.eigenvalues().cwiseAbs();
  const auto unstable_roots = (mod.array() > 1.0 + 1e-10).count();
  if (unstable_roots < 2) {
    unstable(std::to_string(unstable_roots) + " unstable roots for 2 forward-looking variables");
  }
  if (unstable_roots > 2) unstable(std::to_string(unstable_roots) + " unstable roots, no stable path");
}

}  // namespace

FireState fire_state(const ModelState& s, double mp) {
  FireState v;
  v << s.i_lag, s.x_lag, s.u, s.rstar, mp;
  return v;
}

FirePolicy solve_fire_policy(PolicyRule rule, const ModelParams& p) {
  p.validate();
  if (is_taylor(rule)) check_root_count(rule, p);
  const Mat55 A = exogenous_transition(p);
  const Mat53 B = endogenous_loading();
  Eigen::RowVector3d rule_m = Eigen::RowVector3d::Zero();
  Eigen::Matrix<double, 1, 5> rule_n;
  rule_row(rule, p, rule_m, rule_n);

  Eigen::Matrix<double, 1, 5> e_u = Eigen::Matrix<double, 1, 5>::Zero();
  Eigen::Matrix<double, 1, 5> e_r = Eigen::Matrix<double, 1, 5>::Zero();
  e_u(2) = 1.0;
  e_r(3) = 1.0;

  FirePolicy f;
  f.rule = rule;
  Mat35 P = Mat35::Zero();
  bool converged = false;
  for (int it = 1; it <= kMaxIterations; ++it) {
    // With next-period rules fixed at P: E pi' = P0 (A s + B v), same for x.
    const Eigen::Matrix<double, 1, 5> epi_s = P.row(0) * A;
    const Eigen::Matrix<double, 1, 5> ex_s = P.row(1) * A;
    const Eigen::RowVector3d epi_v = P.row(0) * B;
    const Eigen::RowVector3d ex_v = P.row(1) * B;

    Eigen::Matrix3d M;
    Mat35 N;
    M.row(0) = Eigen::RowVector3d(1.0, -p.kappa, 0.0) - p.beta * epi_v;
    N.row(0) = p.beta * epi_s + e_u;
    M.row(1) = Eigen::RowVector3d(0.0, 1.0, p.varphi) - ex_v - p.varphi * epi_v;
    N.row(1) = ex_s + p.varphi * epi_s + p.varphi * e_r;
    M.row(2) = rule_m;
    N.row(2) = rule_n;

    Eigen::FullPivLU<Eigen::Matrix3d> lu(M);
    if (!lu.isInvertible()) unstable("singular expectational system");
    Mat35 next = lu.solve(N);
    if (rule == PolicyRule::StrictTargeting) next.row(0).setZero();
    if (!next.allFinite()) unstable("non-finite coefficients");
    const double step = (next - P).cwiseAbs().maxCoeff();
    P = next;
    f.iterations = it;
    if (step < kTolerance) {
      converged = true;
      break;
    }
  }
  if (!converged) unstable("no fixed point within 10000 iterations");

  f.P = P;
  const Eigen::Matrix<double, 2, 5> P2 = P.topRows<2>();
  f.expectations = P2 * (A + B * P);

  Eigen::Matrix2d endo;
  endo << P(2, 0), P(2, 1), P(1, 0), P(1, 1);
  f.spectral_radius = endo.eigenvalues().cwiseAbs().maxCoeff();
  if (!(f.spectral_radius < 1.0)) unstable("unstable endogenous dynamics");

  NormalRng rng(0x5EEDF1EULL);
  for (int k = 0; k < kAuditStates; ++k) {
    FireState s;
    for (Eigen::Index j = 0; j < 5; ++j) s(j) = rng.next();
    f.residual_norm = std::max(f.residual_norm, fire_residual(f, p, s));
  }
  if (!(f.residual_norm < kResidualLimit)) unstable("equilibrium residuals above 1e-10");
  return f;
}

double fire_residual(const FirePolicy& f, const ModelParams& p, const FireState& s) {
  const Eigen::Vector3d v = f.P * s;
  const FireState next = exogenous_transition(p) * s + endogenous_loading() * v;
  const Eigen::Vector3d v_next = f.P * next;
  const double epi = v_next(0);
  const double ex = v_next(1);
  const double pi = v(0), x = v(1), i = v(2);

  const double nkpc = pi - p.beta * epi - p.kappa * x - s(2);
  const double euler = x - ex + p.varphi * (i - epi - s(3));
  double rule = 0.0;
  const double w = p.lambda_weight / p.kappa;
  switch (f.rule) {
    case PolicyRule::TaylorSmoothing:
    case PolicyRule::TaylorNoSmoothing: {
      const double rho = effective_rho_i(f.rule, p);
      rule = i - rho * s(0) - (1.0 - rho) * (p.phi_pi * pi + p.phi_x * x) - s(4);
      break;
    }
    case PolicyRule::OptimalCommitment: rule = pi + w * (x - s(1)); break;
    case PolicyRule::OptimalDiscretion: rule = pi + w * x; break;
    case PolicyRule::StrictTargeting: rule = pi; break;
  }
  return std::max({std::abs(nkpc), std::abs(euler), std::abs(rule)});
}

PeriodOutcome solve_period_fire(const FirePolicy& f, const ModelState& s, const ModelParams& p,
                                double mp) {
  const FireState st = fire_state(s, mp);
  const Eigen::Vector3d v = f.P * st;
  const Eigen::Vector2d e = f.expectations * st;
  PeriodOutcome o;
  o.pi = f.rule == PolicyRule::StrictTargeting ? 0.0 : v(0);
  o.x = v(1);
  o.i = v(2);
  o.regime = beliefs::Regime::Low;
  o.e_pi_next = e(0);
  o.e_x_next = e(1);
  o.u = s.u;
  o.rstar = s.rstar;
  o.mp = mp;
  o.loss_contrib = period_loss(o.pi, o.x, p.lambda_weight);
  return o;
}

}  // namespace iat::model
