#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "iat/model/engine.hpp"

namespace iat::experiments {

enum class ShockKind { CostPush, Demand, Monetary };

const char* shock_name(ShockKind k) noexcept;
ShockKind parse_shock(std::string_view name);

/// Deterministic response to one innovation at t = 0 from the steady state.
/// Rates quarterly pp.
struct IrfResult {
  model::ExpectationMode mode;
  model::PolicyRule rule = model::PolicyRule::TaylorSmoothing;
  ShockKind shock = ShockKind::CostPush;
  double innovation = 0.0;                 // quarterly pp
  std::optional<double> impact_target;     // annualized pp, when scaled
  double persistence = 0.0;
  int horizon = 0;
  std::vector<double> pi, x, i;
  std::vector<double> e_pi_next;  // E_t pi_{t+1}
  std::vector<double> prior_pi;   // E_{t-1} pi_t
  std::vector<int> regime_high;
};

struct IrfInnovations {
  double cost_push = 0.0;
  double demand = 0.0;
  double monetary = 0.0;
};

/// Path after simultaneous innovations at t = 0.
IrfResult impulse_response_multi(const model::Engine& engine, const IrfInnovations& eps, int horizon);

IrfResult impulse_response(const model::Engine& engine, ShockKind shock, double innovation,
                           int horizon);

/// Innovation such that period-0 inflation equals `impact_pi_annualized`
/// (bisection, tolerance 1e-8 annualized pp).
double innovation_for_impact(const model::Engine& engine, ShockKind shock,
                             double impact_pi_annualized);

IrfResult impulse_response_to_target(const model::Engine& engine, ShockKind shock,
                                     double impact_pi_annualized, int horizon);

struct ForecastErrorPaths {
  std::vector<double> pi;
  std::vector<double> expected;  // E_{t-1} pi_t
  std::vector<double> errors;    // pi_t - E_{t-1} pi_t
  int sign_changes = 0;
  std::optional<int> first_negative;
};

ForecastErrorPaths forecast_error_paths(const IrfResult& irf);

/// Quarters until |pi| first falls to half its impact value, or nothing
/// when it never does within the horizon.
std::optional<int> half_life(const IrfResult& irf);

struct StateDependencyResult {
  std::vector<double> path_mp_only;  // annualized pp
  std::vector<double> path_cp_only;
  std::vector<double> path_both;
  std::vector<double> interaction;
  double peak_interaction = 0.0;  // largest |interaction|, with its sign
  int peak_period = 0;
  double eps_cost_push = 0.0;  // quarterly pp
  double eps_monetary = 0.0;
};

/// Cost-push (AR(1)) and monetary (one-period) shocks, each scaled so its
/// isolated impact on inflation is `impact_each` annualized pp.
StateDependencyResult state_dependency(const model::Engine& engine, double impact_each = 3.0,
                                       int horizon = 40);

}  // namespace iat::experiments
