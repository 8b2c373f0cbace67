#pragma once

#include <optional>

#include "iat/beliefs.hpp"
#include "iat/model/params.hpp"

namespace iat::model {

/// State entering a period. Rates in quarterly pp, x in percent.
struct ModelState {
  beliefs::BeliefState beliefs;  // E_{t-1} pi_t, E_{t-1} x_t
  double i_lag = 0.0;
  double pi_lag = 0.0;  // drives the regime
  double x_lag = 0.0;
  double u = 0.0;       // current cost-push
  double rstar = 0.0;   // current natural-rate deviation
};

struct PeriodOutcome {
  double pi = 0.0;
  double x = 0.0;
  double i = 0.0;
  beliefs::Regime regime = beliefs::Regime::Low;
  double e_pi_next = 0.0;  // E_t pi_{t+1}
  double e_x_next = 0.0;   // E_t x_{t+1}
  double u = 0.0;
  double rstar = 0.0;
  double mp = 0.0;
  double loss_contrib = 0.0;  // (pi^2 + Lambda x^2) / 2
};

/// u' = rho_u u + eps_u, r*' = rho_r r* + eps_r (innovations already scaled).
void step_shocks(ModelState& state, double eps_u, double eps_r, const ModelParams& p);

enum class ThresholdTiming { LaggedInflation, CurrentInflation };

struct SolveOptions {
  std::optional<beliefs::Regime> pinned_regime;
  ThresholdTiming timing = ThresholdTiming::LaggedInflation;
};

/// NKPC, Euler and Taylor rule with subjective expectations, solved jointly
/// for (pi, x, i). Throws ErrorCode::Indeterminate when |det| < 1e-12.
PeriodOutcome solve_period_subjective(const ModelState& s, PolicyRule rule, const ModelParams& p,
                                      double mp = 0.0, const SolveOptions& opts = {});

/// NKPC plus a targeting rule for (pi, x); i is backed out of the Euler
/// equation. StrictTargeting sets pi = 0 exactly.
PeriodOutcome solve_period_targeting(const ModelState& s, PolicyRule rule, const ModelParams& p,
                                     const SolveOptions& opts = {});

/// Dispatches on the rule.
PeriodOutcome solve_period(const ModelState& s, PolicyRule rule, const ModelParams& p,
                           double mp = 0.0, const SolveOptions& opts = {});

/// Carries posted expectations and current outcomes into the next state.
/// Shocks are left for step_shocks.
ModelState advance(const ModelState& s, const PeriodOutcome& o);

inline double period_loss(double pi, double x, double lambda_weight) {
  return 0.5 * (pi * pi + lambda_weight * x * x);
}

}  // namespace iat::model
