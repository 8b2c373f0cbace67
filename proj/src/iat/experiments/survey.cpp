#include "iat/experiments/survey.hpp"

#include <cstdio>

#include <fmt/format.h>

#include "iat/error.hpp"
#include "iat/experiments/simulate.hpp"

namespace iat::experiments {

std::vector<std::string> quarter_labels(const std::string& start, std::size_t count) {
  int year = 0, q = 0;
  char tail = 0;
  if (std::sscanf(start.c_str(), "%4d-Q%1d%c", &year, &q, &tail) != 2 || q < 1 || q > 4) {
    fail(ErrorCode::InvalidArgument, fmt::format("bad quarter label '{}'", start));
  }
  std::vector<std::string> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(fmt::format("{:04d}-Q{}", year, q));
    if (++q > 4) {
      q = 1;
      ++year;
    }
  }
  return out;
}

SyntheticSurvey synthetic_survey(const model::ModelParams& params, const SurveyOptions& opts) {
  require(opts.n >= 2, "survey needs at least 2 rows");
  require(opts.noise_sd >= 0.0, "noise_sd must be non-negative");

  SimulationOptions so;
  so.seed = opts.seed;
  so.burn_in = opts.burn_in;
  so.n_periods = opts.n + 1;
  const auto path = simulate(params, model::ExpectationMode::threshold(),
                             model::PolicyRule::TaylorSmoothing, so)
                        .path;

  // Survey noise gets its own stream so the macro path stays tied to the seed.
  NormalRng noise(opts.seed ^ 0x9E3779B97F4A7C15ULL);
  const auto& spec = params.attention;
  SyntheticSurvey out;
  double s_prev = 0.0;
  double pi_lag = 0.0;
  for (std::size_t t = 0; t < path.size(); ++t) {
    const double pi = path[t].pi;
    const double gamma = spec.gamma_pi(beliefs::classify_regime(pi_lag, spec));
    const double s = s_prev + gamma * (pi - s_prev) + opts.noise_sd * noise.next();
    if (t >= opts.burn_in) {
      if (!out.inflation.empty()) {
        out.data.y.push_back(s);
        out.data.x_prior.push_back(s_prev);
        out.data.x_fe.push_back(pi - s_prev);
        out.data.z.push_back(pi_lag);
      }
      out.inflation.push_back(pi);
      out.expectation.push_back(s);
    }
    s_prev = s;
    pi_lag = pi;
  }
  out.dates = quarter_labels(opts.start, out.inflation.size());
  return out;
}

}  // namespace iat::experiments
