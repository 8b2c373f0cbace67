#include "iat/experiments/irf.hpp"

#include <cmath>

#include <fmt/format.h>

#include "iat/error.hpp"
#include "iat/units.hpp"

namespace iat::experiments {

namespace {

constexpr double kImpactTolerance = 1e-8;

double impact_pi(const model::Engine& engine, ShockKind shock, double eps) {
  IrfInnovations in;
  if (shock == ShockKind::CostPush) in.cost_push = eps;
  if (shock == ShockKind::Demand) in.demand = eps;
  if (shock == ShockKind::Monetary) in.monetary = eps;
  return units::annualize(impulse_response_multi(engine, in, 1).pi.front());
}

}  // namespace

const char* shock_name(ShockKind k) noexcept {
  switch (k) {
    case ShockKind::CostPush: return "cost_push";
    case ShockKind::Demand: return "demand";
    case ShockKind::Monetary: return "monetary";
  }
  return "unknown";
}

ShockKind parse_shock(std::string_view name) {
  for (ShockKind k : {ShockKind::CostPush, ShockKind::Demand, ShockKind::Monetary}) {
    if (name == shock_name(k)) return k;
  }
  fail(ErrorCode::InvalidArgument, fmt::format("unknown shock '{}'", name));
}

IrfResult impulse_response_multi(const model::Engine& engine, const IrfInnovations& eps,
                                 int horizon) {
  require(horizon >= 1, "horizon must be at least 1");
  IrfResult r;
  r.mode = engine.mode();
  r.rule = engine.rule();
  r.horizon = horizon;
  const auto& p = engine.params();
  model::ModelState s;
  s.u = eps.cost_push;
  s.rstar = eps.demand;
  for (int t = 0; t < horizon; ++t) {
    if (t > 0) model::step_shocks(s, 0.0, 0.0, p);
    const model::PeriodOutcome o = engine.solve(s, t == 0 ? eps.monetary : 0.0);
    if (!std::isfinite(o.pi) || !std::isfinite(o.x) || !std::isfinite(o.i)) {
      fail(ErrorCode::Explosive, "explosive path in impulse response");
    }
    r.pi.push_back(o.pi);
    r.x.push_back(o.x);
    r.i.push_back(o.i);
    r.e_pi_next.push_back(o.e_pi_next);
    r.prior_pi.push_back(s.beliefs.prior_pi);
    r.regime_high.push_back(o.regime == beliefs::Regime::High ? 1 : 0);
    s = model::advance(s, o);
  }
  return r;
}

IrfResult impulse_response(const model::Engine& engine, ShockKind shock, double innovation,
                           int horizon) {
  IrfInnovations in;
  if (shock == ShockKind::CostPush) in.cost_push = innovation;
  if (shock == ShockKind::Demand) in.demand = innovation;
  if (shock == ShockKind::Monetary) in.monetary = innovation;
  IrfResult r = impulse_response_multi(engine, in, horizon);
  r.shock = shock;
  r.innovation = innovation;
  r.persistence = shock == ShockKind::CostPush ? engine.params().rho_u
                  : shock == ShockKind::Demand ? engine.params().rho_r
                                               : 0.0;
  return r;
}

double innovation_for_impact(const model::Engine& engine, ShockKind shock,
                             double impact_pi_annualized) {
  require(std::isfinite(impact_pi_annualized), "impact target must be finite");
  if (impact_pi_annualized == 0.0) return 0.0;
  const double slope = impact_pi(engine, shock, 1.0);
  if (!(std::abs(slope) > 0.0)) {
    fail(ErrorCode::NoConvergence,
         fmt::format("cannot bracket impact target: {} shock has no impact on inflation",
                     shock_name(shock)));
  }
  const double guess = impact_pi_annualized / slope;
  if (std::abs(impact_pi(engine, shock, guess) - impact_pi_annualized) < kImpactTolerance) {
    return guess;
  }
  // Bracket on the ray through the linear guess, then bisect.
  const double target = impact_pi_annualized;
  double lo = 0.0;
  double hi = guess;
  double f_hi = impact_pi(engine, shock, hi) - target;
  const double f_lo = -target;
  int widen = 0;
  while (f_hi * f_lo > 0.0) {
    if (++widen > 60) {
      fail(ErrorCode::NoConvergence,
           fmt::format("cannot bracket impact target {} for {} shock (reached {})", target,
                       shock_name(shock), f_hi + target));
    }
    hi *= 2.0;
    f_hi = impact_pi(engine, shock, hi) - target;
  }
  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = impact_pi(engine, shock, mid) - target;
    if (std::abs(f_mid) < kImpactTolerance) return mid;
    if ((f_mid > 0.0) == (f_hi > 0.0)) {
      hi = mid;
      f_hi = f_mid;
    } else {
      lo = mid;
    }
  }
  fail(ErrorCode::NoConvergence,
       fmt::format("impact bisection did not reach tolerance for target {}", target));
}

IrfResult impulse_response_to_target(const model::Engine& engine, ShockKind shock,
                                     double impact_pi_annualized, int horizon) {
  const double eps = innovation_for_impact(engine, shock, impact_pi_annualized);
  IrfResult r = impulse_response(engine, shock, eps, horizon);
  r.impact_target = impact_pi_annualized;
  return r;
}

ForecastErrorPaths forecast_error_paths(const IrfResult& irf) {
  ForecastErrorPaths f;
  f.pi = irf.pi;
  f.expected = irf.prior_pi;
  int last_sign = 0;
  for (std::size_t t = 0; t < irf.pi.size(); ++t) {
    const double e = irf.pi[t] - irf.prior_pi[t];
    f.errors.push_back(e);
    const int sign = e > 0.0 ? 1 : (e < 0.0 ? -1 : 0);
    if (sign < 0 && !f.first_negative) f.first_negative = static_cast<int>(t);
    if (sign != 0) {
      if (last_sign != 0 && sign != last_sign) ++f.sign_changes;
      last_sign = sign;
    }
  }
  return f;
}

std::optional<int> half_life(const IrfResult& irf) {
  if (irf.pi.empty() || irf.pi.front() == 0.0) return std::nullopt;
  const double half = 0.5 * std::abs(irf.pi.front());
  for (std::size_t t = 1; t < irf.pi.size(); ++t) {
    if (std::abs(irf.pi[t]) <= half) return static_cast<int>(t);
  }
  return std::nullopt;
}

StateDependencyResult state_dependency(const model::Engine& engine, double impact_each,
                                       int horizon) {
  require(horizon >= 1, "horizon must be at least 1");
  StateDependencyResult r;
  r.eps_cost_push = innovation_for_impact(engine, ShockKind::CostPush, impact_each);
  r.eps_monetary = innovation_for_impact(engine, ShockKind::Monetary, impact_each);

  const auto cp = impulse_response_multi(engine, {r.eps_cost_push, 0.0, 0.0}, horizon);
  const auto mp = impulse_response_multi(engine, {0.0, 0.0, r.eps_monetary}, horizon);
  const auto both = impulse_response_multi(engine, {r.eps_cost_push, 0.0, r.eps_monetary}, horizon);
  for (int t = 0; t < horizon; ++t) {
    const auto k = static_cast<std::size_t>(t);
    r.path_cp_only.push_back(units::annualize(cp.pi[k]));
    r.path_mp_only.push_back(units::annualize(mp.pi[k]));
    r.path_both.push_back(units::annualize(both.pi[k]));
    const double inter = r.path_both[k] - r.path_mp_only[k] - r.path_cp_only[k];
    r.interaction.push_back(inter);
    if (std::abs(inter) > std::abs(r.peak_interaction)) {
      r.peak_interaction = inter;
      r.peak_period = t;
    }
  }
  return r;
}

}  // namespace iat::experiments
