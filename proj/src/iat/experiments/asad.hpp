#pragma once

#include <array>
#include <optional>
#include <vector>

#include "iat/beliefs.hpp"

namespace iat::experiments {

/// Stylized three-equation setting: gamma_x = 0, i = phi_pi pi, varphi = 1.
/// All values in the example's own units (threshold compared with pi as is).
struct AsAdParams {
  double threshold = 4.0;
  double gamma_low = 0.2;
  double gamma_high = 0.4;
  double beta = 0.99;
  double kappa = 0.6;
  double phi_pi = 1.05;
  std::array<double, 4> u{0.0, 10.0, 10.0, 0.0};
  bool allow_switch = true;  // false keeps gamma_low in every period

  void validate() const;
};

/// Lines in (x, pi) space: pi = slope x + intercept.
struct Line {
  double slope = 0.0;
  double intercept = 0.0;
};

struct AsAdCurves {
  int period = 0;
  beliefs::Regime regime = beliefs::Regime::Low;
  double gamma = 0.0;
  Line as;
  Line ad;
  double eq_pi = 0.0;
  double eq_x = 0.0;
  // Same period had attention stayed low; set only in high-regime periods.
  std::optional<Line> as_no_switch;
  std::optional<Line> ad_no_switch;
};

/// Curves and equilibria for periods 0..3. Throws "AD slope degenerate"
/// when phi_pi <= gamma in an active regime.
std::vector<AsAdCurves> asad_example(const AsAdParams& p = {});

/// pi_2 / pi_1 - 1.
double inflation_growth_1_to_2(const std::vector<AsAdCurves>& curves);

}  // namespace iat::experiments
