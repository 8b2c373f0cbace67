#include <doctest.h>

#include <cmath>

#include "iat/error.hpp"
#include "iat/experiments/irf.hpp"

using namespace iat::experiments;
using namespace iat::model;

TEST_CASE("zero innovation stays at the steady state") {
  const ModelParams p;
  for (auto mode : {ExpectationMode::threshold(), ExpectationMode::fire()}) {
    const Engine e(p, mode, PolicyRule::TaylorSmoothing);
    for (ShockKind k : {ShockKind::CostPush, ShockKind::Demand, ShockKind::Monetary}) {
      const auto r = impulse_response(e, k, 0.0, 20);
      REQUIRE(r.pi.size() == 20);
      for (std::size_t t = 0; t < r.pi.size(); ++t) {
        CHECK(r.pi[t] == 0.0);
        CHECK(r.x[t] == 0.0);
        CHECK(r.i[t] == 0.0);
      }
    }
  }
}

TEST_CASE("a shock below the threshold reproduces fixed low attention bitwise") {
  const ModelParams p;
  const Engine th(p, ExpectationMode::threshold(), PolicyRule::TaylorSmoothing);
  const Engine fx(p, ExpectationMode::fixed(p.attention.gamma_pi_low), PolicyRule::TaylorSmoothing);
  for (ShockKind k : {ShockKind::CostPush, ShockKind::Demand, ShockKind::Monetary}) {
    const auto a = impulse_response(th, k, 0.2, 40);
    const auto b = impulse_response(fx, k, 0.2, 40);
    for (int r : a.regime_high) REQUIRE(r == 0);
    CHECK(a.pi == b.pi);
    CHECK(a.x == b.x);
    CHECK(a.i == b.i);
  }
}

TEST_CASE("impact scaling hits its target") {
  const ModelParams p;
  for (auto mode : {ExpectationMode::threshold(), ExpectationMode::fixed(0.36), ExpectationMode::fire()}) {
    const Engine e(p, mode, PolicyRule::TaylorSmoothing);
    for (double target : {1.0, 3.0, 5.0, -2.0}) {
      const auto r = impulse_response_to_target(e, ShockKind::CostPush, target, 10);
      CHECK(std::abs(4.0 * r.pi[0] - target) < 1e-8);
      REQUIRE(r.impact_target.has_value());
      CHECK(*r.impact_target == target);
    }
  }
  const Engine strict(p, ExpectationMode::fire(), PolicyRule::StrictTargeting);
  CHECK_THROWS_AS(innovation_for_impact(strict, ShockKind::CostPush, 3.0), iat::Error);
}

TEST_CASE("monetary innovation lasts one period") {
  const ModelParams p;
  const Engine e(p, ExpectationMode::fire(), PolicyRule::TaylorNoSmoothing);
  const auto r = impulse_response(e, ShockKind::Monetary, 0.25, 10);
  CHECK(r.pi[0] < 0.0);
  for (std::size_t t = 1; t < r.pi.size(); ++t) CHECK(std::abs(r.pi[t]) < 1e-14);
}

TEST_CASE("forecast errors and half-life") {
  const ModelParams p;
  const Engine e(p, ExpectationMode::threshold(), PolicyRule::TaylorSmoothing);
  const auto r = impulse_response_to_target(e, ShockKind::CostPush, 5.0, 40);
  const auto fe = forecast_error_paths(r);
  int changes = 0;
  for (std::size_t t = 0; t < fe.errors.size(); ++t) {
    CHECK(fe.errors[t] == doctest::Approx(fe.pi[t] - fe.expected[t]));
    if (t > 0 && (fe.errors[t] > 0) != (fe.errors[t - 1] > 0)) ++changes;
  }
  CHECK(fe.sign_changes == changes);
  CHECK(fe.expected[0] == 0.0);

  const auto hl = half_life(r);
  REQUIRE(hl.has_value());
  CHECK(std::abs(r.pi[static_cast<std::size_t>(*hl)]) <= 0.5 * std::abs(r.pi[0]));
  CHECK(std::abs(r.pi[static_cast<std::size_t>(*hl) - 1]) > 0.5 * std::abs(r.pi[0]));
}

TEST_CASE("state dependency is exactly zero for linear modes") {
  const ModelParams p;
  for (auto mode : {ExpectationMode::fixed(0.18), ExpectationMode::fire()}) {
    const Engine e(p, mode, PolicyRule::TaylorSmoothing);
    const auto sd = state_dependency(e, 3.0, 40);
    CHECK(std::abs(sd.peak_interaction) < 1e-9);
    CHECK(std::abs(sd.path_mp_only[0] - 3.0) < 1e-8);
    CHECK(std::abs(sd.path_cp_only[0] - 3.0) < 1e-8);
  }
  const Engine th(p, ExpectationMode::threshold(), PolicyRule::TaylorSmoothing);
  const auto sd = state_dependency(th, 3.0, 40);
  for (std::size_t t = 0; t < sd.interaction.size(); ++t) {
    CHECK(sd.interaction[t] ==
          doctest::Approx(sd.path_both[t] - sd.path_mp_only[t] - sd.path_cp_only[t]));
  }
  CHECK(sd.peak_interaction > 0.0);
}

TEST_CASE("shock names") {
  for (ShockKind k : {ShockKind::CostPush, ShockKind::Demand, ShockKind::Monetary}) {
    CHECK(parse_shock(shock_name(k)) == k);
  }
  CHECK_THROWS_AS(parse_shock("supply"), iat::Error);
}
