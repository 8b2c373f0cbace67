#pragma once

#include <limits>
#include <optional>

namespace iat::beliefs {

enum class Regime { Low, High };

const char* regime_name(Regime r) noexcept;

/// Threshold and per-regime attention weights. Rates in quarterly pp.
///
/// A threshold of +infinity disables the high-attention regime. The optional
/// gamma_x_high overrides output-gap attention in the high regime; when unset
/// output-gap attention is the same in both regimes.
struct AttentionSpec {
  double threshold = 1.0;
  double gamma_pi_low = 0.18;
  double gamma_pi_high = 0.36;
  double gamma_x = 0.25;
  std::optional<double> gamma_x_high;

  double gamma_pi(Regime r) const { return r == Regime::Low ? gamma_pi_low : gamma_pi_high; }
  double gamma_x_for(Regime r) const {
    return (r == Regime::High && gamma_x_high) ? *gamma_x_high : gamma_x;
  }

  // Throws iat::Error on invalid fields.
  void validate() const;

  static AttentionSpec fixed(double gamma_pi, double gamma_x) {
    return AttentionSpec{std::numeric_limits<double>::infinity(), gamma_pi, gamma_pi, gamma_x, {}};
  }
};

/// Priors carried into a period: E_{t-1} pi_t and E_{t-1} x_t.
struct BeliefState {
  double prior_pi = 0.0;
  double prior_x = 0.0;
};

/// Perceived law of motion for inflation. The model uses the random walk
/// (rho_pi = 1, long-run belief 0).
struct PerceivedLaw {
  double rho_pi = 1.0;
  double pi_bar_longrun = 0.0;

  static constexpr PerceivedLaw random_walk() { return {1.0, 0.0}; }
};

struct AttentionProblem {
  double info_cost = 1.0;  // 1 / lambda
  double stakes = 1.0;     // chi
  double rho_pi = 1.0;
  double prior_var = 1.0;  // sigma^2_pi
};

// Low iff pi_lagged <= threshold (ties go to Low).
Regime classify_regime(double pi_lagged, const AttentionSpec& spec);

double update_inflation_expectation(const BeliefState& prior, double pi_current, Regime regime,
                                    const AttentionSpec& spec,
                                    const PerceivedLaw& law = PerceivedLaw::random_walk());

// Same update with an explicit gain; used where the gain is not regime-driven.
double update_inflation_expectation_with_gain(double prior_pi, double pi_current, double gamma,
                                              const PerceivedLaw& law = PerceivedLaw::random_walk());

double update_output_gap_expectation(const BeliefState& prior, double x_current,
                                     const AttentionSpec& spec, Regime regime = Regime::Low);

/// Optimal attention from the static rational-inattention problem:
/// max{0, 1 - info_cost / (2 stakes rho^2 prior_var)}.
double optimal_attention(const AttentionProblem& in);

/// Signal noise variance implied by an attention weight,
/// prior_var (1 - gamma) / gamma. Throws for gamma = 0.
double noise_variance_for_attention(double gamma, double prior_var);

}  // namespace iat::beliefs
