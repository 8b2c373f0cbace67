#include "iat/model/period.hpp"

#include <array>
#include <cmath>

#include <fmt/format.h>

#include "iat/error.hpp"

namespace iat::model {

namespace {

using beliefs::Regime;

constexpr double kMinDet = 1e-12;

using Mat3 = std::array<std::array<double, 3>, 3>;
using Vec3 = std::array<double, 3>;

double det3(const Mat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

[[noreturn]] void indeterminate(const ModelParams& p, double gamma, double det) {
  fail(ErrorCode::Indeterminate,
       fmt::format("indeterminate equilibrium (det={:.3g}; beta={:.10g}, kappa={:.10g}, "
                   "varphi={:.10g}, rho_i={:.10g}, phi_pi={:.10g}, phi_x={:.10g}, gamma_pi={:.10g}, "
                   "gamma_x={:.10g})",
                   det, p.beta, p.kappa, p.varphi, p.rho_i, p.phi_pi, p.phi_x, gamma,
                   p.attention.gamma_x));
}

Vec3 cramer(const Mat3& m, const Vec3& b, const ModelParams& p, double gamma) {
  const double d = det3(m);
  if (!(std::abs(d) >= kMinDet)) indeterminate(p, gamma, d);
  Vec3 out{};
  for (std::size_t k = 0; k < 3; ++k) {
    Mat3 mk = m;
    for (std::size_t r = 0; r < 3; ++r) mk[r][k] = b[r];
    out[k] = det3(mk) / d;
  }
  return out;
}

PeriodOutcome finish(const ModelState& s, const ModelParams& p, Regime regime, double pi, double x,
                     double i, double mp) {
  PeriodOutcome o;
  o.pi = pi;
  o.x = x;
  o.i = i;
  o.regime = regime;
  o.e_pi_next = beliefs::update_inflation_expectation(s.beliefs, pi, regime, p.attention);
  o.e_x_next = beliefs::update_output_gap_expectation(s.beliefs, x, p.attention, regime);
  o.u = s.u;
  o.rstar = s.rstar;
  o.mp = mp;
  o.loss_contrib = period_loss(pi, x, p.lambda_weight);
  return o;
}

PeriodOutcome subjective_in_regime(const ModelState& s, PolicyRule rule, const ModelParams& p,
                                   double mp, Regime regime) {
  const double g = p.attention.gamma_pi(regime);
  const double gx = p.attention.gamma_x_for(regime);
  const double prior = s.beliefs.prior_pi;
  const double prior_x = s.beliefs.prior_x;
  const double rho = effective_rho_i(rule, p);

  const Mat3 m{{{1.0 - p.beta * g, -p.kappa, 0.0},
                {-p.varphi * g, 1.0 - gx, p.varphi},
                {-(1.0 - rho) * p.phi_pi, -(1.0 - rho) * p.phi_x, 1.0}}};
  const Vec3 b{p.beta * (1.0 - g) * prior + s.u,
               (1.0 - gx) * prior_x + p.varphi * ((1.0 - g) * prior + s.rstar),
               rho * s.i_lag + mp};
  const Vec3 v = cramer(m, b, p, g);
  return finish(s, p, regime, v[0], v[1], v[2], mp);
}

PeriodOutcome targeting_in_regime(const ModelState& s, PolicyRule rule, const ModelParams& p,
                                  Regime regime) {
  const double g = p.attention.gamma_pi(regime);
  const double prior = s.beliefs.prior_pi;
  const double nkpc_rhs = p.beta * (1.0 - g) * prior + s.u;

  double pi = 0.0;
  double x = 0.0;
  if (rule == PolicyRule::StrictTargeting) {
    x = -nkpc_rhs / p.kappa;
  } else {
    // (1 - beta g) pi - kappa x = nkpc_rhs ;  pi + (Lambda/kappa) x = rule_rhs
    const double w = p.lambda_weight / p.kappa;
    const double rule_rhs = rule == PolicyRule::OptimalCommitment ? w * s.x_lag : 0.0;
    const double a = 1.0 - p.beta * g;
    const double det = a * w + p.kappa;
    if (!(std::abs(det) >= kMinDet)) fail(ErrorCode::Singular, "singular targeting-rule system");
    pi = (nkpc_rhs * w + p.kappa * rule_rhs) / det;
    x = (a * rule_rhs - nkpc_rhs) / det;
  }
  PeriodOutcome o = finish(s, p, regime, pi, x, 0.0, 0.0);
  o.i = o.e_pi_next + s.rstar + (o.e_x_next - x) / p.varphi;
  return o;
}

template <class Solve>
PeriodOutcome with_regime(const ModelState& s, const ModelParams& p, const SolveOptions& opts,
                          Solve&& solve) {
  if (opts.pinned_regime) return solve(*opts.pinned_regime);
  if (opts.timing == ThresholdTiming::LaggedInflation) {
    return solve(beliefs::classify_regime(s.pi_lag, p.attention));
  }
  // Current-inflation timing: keep the first self-consistent regime, Low first.
  PeriodOutcome low = solve(Regime::Low);
  if (beliefs::classify_regime(low.pi, p.attention) == Regime::Low) return low;
  return solve(Regime::High);
}

}  // namespace

void step_shocks(ModelState& state, double eps_u, double eps_r, const ModelParams& p) {
  state.u = p.rho_u * state.u + eps_u;
  state.rstar = p.rho_r * state.rstar + eps_r;
}

PeriodOutcome solve_period_subjective(const ModelState& s, PolicyRule rule, const ModelParams& p,
                                      double mp, const SolveOptions& opts) {
  require(is_taylor(rule), "solve_period_subjective takes a Taylor rule");
  return with_regime(s, p, opts, [&](Regime r) { return subjective_in_regime(s, rule, p, mp, r); });
}

PeriodOutcome solve_period_targeting(const ModelState& s, PolicyRule rule, const ModelParams& p,
                                     const SolveOptions& opts) {
  require(!is_taylor(rule), "solve_period_targeting takes a targeting rule");
  return with_regime(s, p, opts, [&](Regime r) { return targeting_in_regime(s, rule, p, r); });
}

PeriodOutcome solve_period(const ModelState& s, PolicyRule rule, const ModelParams& p, double mp,
                           const SolveOptions& opts) {
  return is_taylor(rule) ? solve_period_subjective(s, rule, p, mp, opts)
                         : solve_period_targeting(s, rule, p, opts);
}

ModelState advance(const ModelState& s, const PeriodOutcome& o) {
  ModelState next = s;
  next.beliefs = {o.e_pi_next, o.e_x_next};
  next.i_lag = o.i;
  next.pi_lag = o.pi;
  next.x_lag = o.x;
  return next;
}

}  // namespace iat::model
