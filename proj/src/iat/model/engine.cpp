#include "iat/model/engine.hpp"

namespace iat::model {

Engine::Engine(const ModelParams& params, ExpectationMode mode, PolicyRule rule, SolveOptions opts)
    : params_(effective_params(params, mode)), mode_(mode), rule_(rule), opts_(opts) {
  params_.validate();
  if (mode_.kind == ExpectationMode::Kind::Fire) fire_ = solve_fire_policy(rule_, params_);
}

PeriodOutcome Engine::solve(const ModelState& s, double mp) const {
  if (fire_) return solve_period_fire(*fire_, s, params_, mp);
  return solve_period(s, rule_, params_, mp, opts_);
}

}  // namespace iat::model
