#include "iat/model/params.hpp"

#include <cmath>
#include <cstdlib>

#include <fmt/format.h>

#include "iat/error.hpp"

namespace iat::model {

void ModelParams::validate() const {
  auto finite = [](double v) { return std::isfinite(v); };
  require(beta > 0.0 && beta < 1.0, "beta must lie in (0,1)");
  require(finite(kappa) && kappa > 0.0, "kappa must be positive");
  require(finite(varphi) && varphi > 0.0, "varphi must be positive");
  require(rho_i >= 0.0 && rho_i < 1.0, "rho_i must lie in [0,1)");
  require(finite(phi_pi) && finite(phi_x), "Taylor coefficients must be finite");
  require(rho_u >= 0.0 && rho_u < 1.0, "rho_u must lie in [0,1)");
  require(rho_r >= 0.0 && rho_r < 1.0, "rho_r must lie in [0,1)");
  require(finite(sigma_u) && sigma_u >= 0.0, "sigma_u must be non-negative");
  require(finite(sigma_r) && sigma_r >= 0.0, "sigma_r must be non-negative");
  require(finite(lambda_weight) && lambda_weight >= 0.0, "lambda_weight must be non-negative");
  attention.validate();
}

const char* rule_name(PolicyRule r) noexcept {
  switch (r) {
    case PolicyRule::TaylorSmoothing: return "taylor_smoothing";
    case PolicyRule::TaylorNoSmoothing: return "taylor_no_smoothing";
    case PolicyRule::OptimalCommitment: return "commitment";
    case PolicyRule::OptimalDiscretion: return "discretion";
    case PolicyRule::StrictTargeting: return "strict_targeting";
  }
  return "unknown";
}

PolicyRule parse_rule(std::string_view name) {
  for (PolicyRule r : kAllRules) {
    if (name == rule_name(r)) return r;
  }
  if (name == "1") return PolicyRule::TaylorSmoothing;
  if (name == "2") return PolicyRule::TaylorNoSmoothing;
  if (name == "3") return PolicyRule::OptimalCommitment;
  if (name == "4") return PolicyRule::OptimalDiscretion;
  if (name == "5") return PolicyRule::StrictTargeting;
  fail(ErrorCode::InvalidArgument, fmt::format("unknown policy rule '{}'", name));
}

std::string ExpectationMode::name() const {
  switch (kind) {
    case Kind::ThresholdAttention: return "threshold";
    case Kind::FixedAttention: return fmt::format("fixed({:g})", gamma_pi);
    case Kind::Fire: return "fire";
  }
  return "unknown";
}

ExpectationMode parse_mode(std::string_view name, const ModelParams& p) {
  if (name == "threshold") return ExpectationMode::threshold();
  if (name == "fire") return ExpectationMode::fire();
  if (name == "fixed") return ExpectationMode::fixed(p.attention.gamma_pi_low);
  if (name.size() > 7 && name.substr(0, 6) == "fixed(" && name.back() == ')') {
    const std::string inner(name.substr(6, name.size() - 7));
    char* end = nullptr;
    const double g = std::strtod(inner.c_str(), &end);
    if (end != inner.c_str() && *end == '\0') {
      require(g >= 0.0 && g <= 1.0, "fixed attention must lie in [0,1]");
      return ExpectationMode::fixed(g);
    }
  }
  fail(ErrorCode::InvalidArgument, fmt::format("unknown expectation mode '{}'", name));
}

ModelParams effective_params(const ModelParams& p, const ExpectationMode& mode) {
  ModelParams out = p;
  if (mode.kind == ExpectationMode::Kind::FixedAttention) {
    require(mode.gamma_pi >= 0.0 && mode.gamma_pi <= 1.0, "fixed attention must lie in [0,1]");
    out.attention = beliefs::AttentionSpec::fixed(mode.gamma_pi, p.attention.gamma_x);
  }
  return out;
}

}  // namespace iat::model
