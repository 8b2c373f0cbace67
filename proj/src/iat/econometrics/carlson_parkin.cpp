#include "iat/econometrics/carlson_parkin.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/distributions/normal.hpp>

#include "iat/error.hpp"

namespace iat::econometrics {

namespace {

const boost::math::normal kStd{};

double clamp_share(double q, double eps, bool& clamped) {
  const double c = std::clamp(q, eps, 1.0 - eps);
  if (c != q) clamped = true;
  return c;
}

}  // namespace

void CategoricalShares::validate() const {
  for (double q : {q_down, q_same, q_up}) {
    require(std::isfinite(q) && q >= 0.0 && q <= 1.0, "shares must lie in [0,1]");
  }
  require(std::abs(q_down + q_same + q_up - 1.0) <= 1e-9, "shares must sum to 1");
}

CarlsonParkinResult carlson_parkin(const CategoricalShares& shares, double a, double eps) {
  shares.validate();
  require(a > 0.0 && std::isfinite(a), "indifference threshold a must be positive");
  require(eps > 0.0 && eps < 0.5, "clamp eps must lie in (0, 0.5)");

  CarlsonParkinResult r;
  const double q_down = clamp_share(shares.q_down, eps, r.clamped);
  const double q_up = clamp_share(shares.q_up, eps, r.clamped);
  const double upper = boost::math::quantile(kStd, 1.0 - q_up);
  const double lower = boost::math::quantile(kStd, q_down);
  if (!(upper > lower)) fail(ErrorCode::InvalidArgument, "non-positive implied dispersion");
  r.sigma = 2.0 * a / (upper - lower);
  r.mu = a - r.sigma * upper;
  return r;
}

CategoricalShares implied_shares(double mu, double sigma, double a) {
  require(sigma > 0.0 && std::isfinite(sigma), "sigma must be positive");
  require(a > 0.0 && std::isfinite(a), "indifference threshold a must be positive");
  CategoricalShares s;
  s.q_down = boost::math::cdf(kStd, (-a - mu) / sigma);
  s.q_up = boost::math::cdf(boost::math::complement(kStd, (a - mu) / sigma));
  s.q_same = 1.0 - s.q_down - s.q_up;
  return s;
}

}  // namespace iat::econometrics
