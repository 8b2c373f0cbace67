#include <doctest.h>

#include <cmath>

#include "iat/econometrics/carlson_parkin.hpp"
#include "iat/error.hpp"
#include "oracles.hpp"

using namespace iat::econometrics;

namespace {

CategoricalShares oracle_shares(double mu, double sigma, double a) {
  const double down = oracle::normal_cdf((-a - mu) / sigma);
  const double up = 1.0 - oracle::normal_cdf((a - mu) / sigma);
  return {down, 1.0 - down - up, up};
}

}  // namespace

TEST_CASE("round trip through erfc shares") {
  for (double mu : {-0.8, -0.3, 0.0, 0.2, 0.6}) {
    for (double sigma : {0.5, 1.0, 2.5}) {
      const auto shares = oracle_shares(mu, sigma, 0.5);
      const auto r = carlson_parkin(shares, 0.5);
      CHECK(std::abs(r.mu - mu) < 1e-9);
      CHECK(std::abs(r.sigma - sigma) < 1e-9);
      CHECK_FALSE(r.clamped);
    }
  }
}

TEST_CASE("implied shares agree with the erfc oracle") {
  const auto a = implied_shares(0.4, 1.2, 0.5);
  const auto b = oracle_shares(0.4, 1.2, 0.5);
  CHECK(std::abs(a.q_down - b.q_down) < 1e-14);
  CHECK(std::abs(a.q_up - b.q_up) < 1e-14);
}

TEST_CASE("symmetric shares") {
  const auto r = carlson_parkin({0.25, 0.5, 0.25}, 0.5);
  CHECK(std::abs(r.mu) < 1e-12);
  CHECK(r.sigma == doctest::Approx(0.5 / 0.6744897501960817).epsilon(1e-12));
}

TEST_CASE("more up than down answers means a positive mean") {
  CHECK(carlson_parkin({0.1, 0.5, 0.4}).mu > 0.0);
  CHECK(carlson_parkin({0.4, 0.5, 0.1}).mu < 0.0);
}

TEST_CASE("degenerate shares") {
  const auto r = carlson_parkin({0.0, 0.3, 0.7});
  CHECK(r.clamped);
  CHECK(std::isfinite(r.mu));
  CHECK_THROWS_WITH(carlson_parkin({0.6, 0.0, 0.4}), doctest::Contains("non-positive implied dispersion"));
  CHECK_THROWS_AS(carlson_parkin({0.3, 0.3, 0.3}), iat::Error);
  CHECK_THROWS_AS(carlson_parkin({-0.1, 0.6, 0.5}), iat::Error);
}
