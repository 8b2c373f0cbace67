#include "iat/experiments/asad.hpp"

#include <cmath>

#include "iat/error.hpp"

namespace iat::experiments {

namespace {

Line as_curve(const AsAdParams& p, double gamma, double prior, double u) {
  const double d = 1.0 - p.beta * gamma;
  return {p.kappa / d, (u + p.beta * (1.0 - gamma) * prior) / d};
}

Line ad_curve(const AsAdParams& p, double gamma, double prior) {
  const double d = p.phi_pi - gamma;
  if (!(d > 0.0)) fail(ErrorCode::InvalidArgument, "AD slope degenerate (phi_pi <= gamma)");
  return {-1.0 / d, (1.0 - gamma) * prior / d};
}

}  // namespace

void AsAdParams::validate() const {
  require(beta > 0.0 && beta < 1.0, "beta must lie in (0,1)");
  require(kappa > 0.0, "kappa must be positive");
  require(gamma_low >= 0.0 && gamma_low <= 1.0 && gamma_high >= 0.0 && gamma_high <= 1.0,
          "attention weights must lie in [0,1]");
  require(!std::isnan(threshold), "threshold must not be NaN");
}

std::vector<AsAdCurves> asad_example(const AsAdParams& p) {
  p.validate();
  beliefs::AttentionSpec spec{p.threshold, p.gamma_low, p.allow_switch ? p.gamma_high : p.gamma_low,
                              0.0, {}};
  std::vector<AsAdCurves> out;
  double prior = 0.0;
  double pi_lag = 0.0;
  for (int t = 0; t < 4; ++t) {
    AsAdCurves c;
    c.period = t;
    c.regime = beliefs::classify_regime(pi_lag, spec);
    c.gamma = spec.gamma_pi(c.regime);
    const double u = p.u[static_cast<std::size_t>(t)];
    c.as = as_curve(p, c.gamma, prior, u);
    c.ad = ad_curve(p, c.gamma, prior);
    c.eq_x = (c.ad.intercept - c.as.intercept) / (c.as.slope - c.ad.slope);
    c.eq_pi = c.as.slope * c.eq_x + c.as.intercept;
    if (c.regime == beliefs::Regime::High) {
      c.as_no_switch = as_curve(p, p.gamma_low, prior, u);
      c.ad_no_switch = ad_curve(p, p.gamma_low, prior);
    }
    prior = beliefs::update_inflation_expectation({prior, 0.0}, c.eq_pi, c.regime, spec);
    pi_lag = c.eq_pi;
    out.push_back(c);
  }
  return out;
}

double inflation_growth_1_to_2(const std::vector<AsAdCurves>& curves) {
  require(curves.size() >= 3, "need periods 0..2");
  require(curves[1].eq_pi != 0.0, "period-1 inflation is zero");
  return curves[2].eq_pi / curves[1].eq_pi - 1.0;
}

}  // namespace iat::experiments
