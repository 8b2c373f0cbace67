#pragma once

namespace iat::econometrics {

struct CategoricalShares {
  double q_down = 0.0;
  double q_same = 0.0;
  double q_up = 0.0;

  // Each share in [0,1] and the three summing to 1 within 1e-9.
  void validate() const;
};

struct CarlsonParkinResult {
  double mu = 0.0;
  double sigma = 0.0;
  bool clamped = false;  // a share was moved into [eps, 1-eps]
};

inline constexpr double kShareClamp = 1e-4;

/// Latent N(mu, sigma^2) with "same" answers on [-a, a]:
///   sigma = 2a / (Phi^-1(1 - q_up) - Phi^-1(q_down)),
///   mu    = a - sigma Phi^-1(1 - q_up).
CarlsonParkinResult carlson_parkin(const CategoricalShares& shares, double a = 0.5,
                                   double eps = kShareClamp);

/// Shares implied by N(mu, sigma^2) and the indifference band [-a, a].
CategoricalShares implied_shares(double mu, double sigma, double a = 0.5);

}  // namespace iat::econometrics
