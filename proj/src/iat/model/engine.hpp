#pragma once

#include <optional>

#include "iat/model/fire.hpp"
#include "iat/model/params.hpp"
#include "iat/model/period.hpp"

namespace iat::model {

/// Period solver bound to one (mode, rule, params) combination.
class Engine {
 public:
  Engine(const ModelParams& params, ExpectationMode mode, PolicyRule rule, SolveOptions opts = {});

  PeriodOutcome solve(const ModelState& s, double mp = 0.0) const;

  const ModelParams& params() const { return params_; }  // after the mode override
  ExpectationMode mode() const { return mode_; }
  PolicyRule rule() const { return rule_; }
  const std::optional<FirePolicy>& fire_policy() const { return fire_; }

 private:
  ModelParams params_;
  ExpectationMode mode_;
  PolicyRule rule_;
  SolveOptions opts_;
  std::optional<FirePolicy> fire_;
};

}  // namespace iat::model
