#pragma once

#include <string>
#include <string_view>

#include "iat/beliefs.hpp"

namespace iat::model {

/// Structural parameters. Rates and shock volatilities in quarterly pp.
struct ModelParams {
  double beta = 1.0 / (1.0 + 0.01 / 4.0);
  double kappa = 0.057;
  double varphi = 1.0;
  double rho_i = 0.7;
  double phi_pi = 2.0;
  double phi_x = 0.125;
  double rho_u = 0.8;
  double sigma_u = 0.5;
  double rho_r = 0.8;
  double sigma_r = 0.5;
  double lambda_weight = 0.007;
  beliefs::AttentionSpec attention;

  void validate() const;
  static ModelParams baseline() { return {}; }
};

enum class PolicyRule {
  TaylorSmoothing,
  TaylorNoSmoothing,
  OptimalCommitment,
  OptimalDiscretion,
  StrictTargeting,
};

inline constexpr PolicyRule kAllRules[] = {
    PolicyRule::TaylorSmoothing, PolicyRule::TaylorNoSmoothing, PolicyRule::OptimalCommitment,
    PolicyRule::OptimalDiscretion, PolicyRule::StrictTargeting};

const char* rule_name(PolicyRule r) noexcept;
PolicyRule parse_rule(std::string_view name);
inline bool is_taylor(PolicyRule r) {
  return r == PolicyRule::TaylorSmoothing || r == PolicyRule::TaylorNoSmoothing;
}
// Interest-rate smoothing actually applied under the rule.
inline double effective_rho_i(PolicyRule r, const ModelParams& p) {
  return r == PolicyRule::TaylorSmoothing ? p.rho_i : 0.0;
}

struct ExpectationMode {
  enum class Kind { ThresholdAttention, FixedAttention, Fire };
  Kind kind = Kind::ThresholdAttention;
  double gamma_pi = 0.0;  // FixedAttention only

  static ExpectationMode threshold() { return {Kind::ThresholdAttention, 0.0}; }
  static ExpectationMode fixed(double g) { return {Kind::FixedAttention, g}; }
  static ExpectationMode fire() { return {Kind::Fire, 0.0}; }

  bool operator==(const ExpectationMode&) const = default;
  std::string name() const;  // "threshold", "fixed(0.18)", "fire"
};

// Accepts "threshold", "fire", "fixed" (uses gamma_pi_low) or "fixed(g)".
ExpectationMode parse_mode(std::string_view name, const ModelParams& p);

/// Parameters seen by the period solver under a mode: FixedAttention(g)
/// replaces the attention spec with a single regime at gain g.
ModelParams effective_params(const ModelParams& p, const ExpectationMode& mode);

}  // namespace iat::model
