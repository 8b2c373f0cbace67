#include "iat/beliefs.hpp"

#include <algorithm>
#include <cmath>

#include "iat/error.hpp"

namespace iat::beliefs {

namespace {

bool is_fraction(double v) { return v >= 0.0 && v <= 1.0; }

}  // namespace

const char* regime_name(Regime r) noexcept { return r == Regime::Low ? "low" : "high"; }

void AttentionSpec::validate() const {
  require(is_fraction(gamma_pi_low), "gamma_pi_low must lie in [0,1]");
  require(is_fraction(gamma_pi_high), "gamma_pi_high must lie in [0,1]");
  require(is_fraction(gamma_x), "gamma_x must lie in [0,1]");
  require(!gamma_x_high || is_fraction(*gamma_x_high), "gamma_x_high must lie in [0,1]");
  require(!std::isnan(threshold) && threshold != -std::numeric_limits<double>::infinity(),
          "threshold must be finite or +inf");
}

Regime classify_regime(double pi_lagged, const AttentionSpec& spec) {
  return pi_lagged <= spec.threshold ? Regime::Low : Regime::High;
}

double update_inflation_expectation_with_gain(double prior_pi, double pi_current, double gamma,
                                              const PerceivedLaw& law) {
  return (1.0 - law.rho_pi) * law.pi_bar_longrun + law.rho_pi * prior_pi +
         law.rho_pi * gamma * (pi_current - prior_pi);
}

double update_inflation_expectation(const BeliefState& prior, double pi_current, Regime regime,
                                    const AttentionSpec& spec, const PerceivedLaw& law) {
  return update_inflation_expectation_with_gain(prior.prior_pi, pi_current, spec.gamma_pi(regime),
                                                law);
}

double update_output_gap_expectation(const BeliefState& prior, double x_current,
                                     const AttentionSpec& spec, Regime regime) {
  return prior.prior_x + spec.gamma_x_for(regime) * (x_current - prior.prior_x);
}

double optimal_attention(const AttentionProblem& in) {
  require(in.info_cost > 0.0, "info_cost must be positive");
  require(in.stakes > 0.0, "stakes must be positive");
  require(in.prior_var > 0.0, "prior_var must be positive");
  require(is_fraction(in.rho_pi), "rho_pi must lie in [0,1]");
  require(in.rho_pi != 0.0, "degenerate perceived persistence");
  const double denom = 2.0 * in.stakes * in.rho_pi * in.rho_pi * in.prior_var;
  return std::max(0.0, 1.0 - in.info_cost / denom);
}

double noise_variance_for_attention(double gamma, double prior_var) {
  require(prior_var > 0.0, "prior_var must be positive");
  require(is_fraction(gamma), "gamma must lie in [0,1]");
  require(gamma != 0.0, "infinite noise: zero attention has no finite signal variance");
  return prior_var * (1.0 - gamma) / gamma;
}

}  // namespace iat::beliefs
