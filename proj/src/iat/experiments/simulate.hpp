#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "iat/model/engine.hpp"
#include "iat/rng.hpp"

namespace iat::experiments {

enum class ShockSwitch { Both, SupplyOnly, DemandOnly };

const char* switch_name(ShockSwitch s) noexcept;
ShockSwitch parse_switch(std::string_view name);

struct SimulationOptions {
  std::size_t n_periods = 10000;  // reported periods, after the burn-in
  std::size_t burn_in = 500;
  std::uint64_t seed = 1;
  ShockSwitch switches = ShockSwitch::Both;
  bool negate_draws = false;  // antithetic twin of the seed's path
  model::SolveOptions solve;
};

/// Rates annualized pp; welfare in model units (quarterly pp squared).
struct SimulationSummary {
  double welfare = 0.0;             // -mean per-period loss
  double welfare_discounted = 0.0;  // -sum beta^t loss_t over reported periods
  double sd_pi = 0.0;
  double mean_pi = 0.0;
  double freq_high = 0.0;  // share of periods with pi_{t-1} above the threshold
  std::uint64_t seed = 0;
  std::size_t n_periods = 0;
  std::size_t burn_in = 0;
};

struct SimulationResult {
  std::vector<model::PeriodOutcome> path;  // burn-in included
  SimulationSummary summary;
  std::uint64_t hash_eps_u = 0;  // of the raw standard-normal arrays
  std::uint64_t hash_eps_r = 0;
  double supply_multiplier = 1.0;
  double demand_multiplier = 1.0;
};

/// Innovation arrays for a seed and options; shared by every mode and rule.
ShockDraws draws_for(const SimulationOptions& opts);

/// `freq_threshold` classifies pi_{t-1} for freq_high (quarterly pp); pass
/// the threshold-model value so every mode is measured on the same line.
SimulationResult simulate(const model::Engine& engine, const ShockDraws& draws,
                          const SimulationOptions& opts, double freq_threshold);

SimulationResult simulate(const model::ModelParams& params, model::ExpectationMode mode,
                          model::PolicyRule rule, const SimulationOptions& opts);

struct CalibrationOptions {
  double target_freq_high = 0.31;
  std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
  std::size_t n_periods = 10000;
  std::size_t burn_in = 500;
  double lo = 1e-4;
  double hi = 10.0;
  double tolerance = 0.005;
  model::PolicyRule rule = model::PolicyRule::TaylorSmoothing;
};

struct CalibrationResult {
  double sigma = 0.0;
  double freq_high = 0.0;  // seed average at sigma
  std::vector<double> freq_per_seed;
  int evaluations = 0;
  bool widened = false;
};

/// Average freq_high over seeds with sigma_u = sigma_r = sigma.
double mean_freq_high(const model::ModelParams& params, double sigma, const CalibrationOptions& opts,
                      std::vector<double>* per_seed = nullptr);

/// Bisection on the common shock volatility. Widens the bracket once when
/// it does not bracket the target, then fails.
CalibrationResult calibrate_shock_volatility(const model::ModelParams& params,
                                             const CalibrationOptions& opts = {});

struct WelfareCell {
  model::ExpectationMode mode;
  model::PolicyRule rule = model::PolicyRule::TaylorSmoothing;
  double welfare = 0.0;
  double welfare_discounted = 0.0;
  double sd_pi = 0.0;
  double mean_pi = 0.0;
  double freq_high = 0.0;
  std::size_t seed_count = 0;
  std::size_t path_count = 0;
};

struct WelfareOptions {
  std::vector<model::ExpectationMode> modes;  // empty: threshold, fixed(gamma_low), FIRE
  std::vector<model::PolicyRule> rules;       // empty: all five
  std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
  std::size_t n_periods = 10000;
  std::size_t burn_in = 500;
  bool antithetic = true;  // each seed also runs its negated draws
  unsigned workers = 0;    // 0: hardware concurrency
};

/// Mode-major grid of cell averages over every path.
std::vector<WelfareCell> welfare_table(const model::ModelParams& params,
                                       const WelfareOptions& opts = {});

struct SummaryStats {
  double mean_a = 0.0;
  double mean_b = 0.0;
  double sd_a = 0.0;
  double sd_b = 0.0;
  double correlation = 0.0;
};

/// Sample moments (n - 1 divisor) and Pearson correlation.
SummaryStats summary_stats(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace iat::experiments
