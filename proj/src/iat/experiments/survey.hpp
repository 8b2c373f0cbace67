#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "iat/econometrics/threshold.hpp"
#include "iat/model/params.hpp"

namespace iat::experiments {

struct SurveyOptions {
  std::size_t n = 546;        // regression rows
  std::size_t burn_in = 200;
  std::uint64_t seed = 1;
  double noise_sd = 0.05;     // updating noise, quarterly pp
  std::string start = "1978-Q1";
};

/// Quarterly survey built on a threshold-model inflation path. The survey
/// mean follows its own updating law
///   S_t = S_{t-1} + gamma_{r(pi_{t-1})} (pi_t - S_{t-1}) + eta_t,
/// with the attention spec of `params`. Rates quarterly pp.
struct SyntheticSurvey {
  std::vector<std::string> dates;
  std::vector<double> inflation;    // pi_t
  std::vector<double> expectation;  // S_t
  econometrics::RegressionDataset data;  // one row per date after the first
};

SyntheticSurvey synthetic_survey(const model::ModelParams& params, const SurveyOptions& opts = {});

/// `YYYY-Qq` labels, `count` consecutive quarters from `start`.
std::vector<std::string> quarter_labels(const std::string& start, std::size_t count);

}  // namespace iat::experiments
