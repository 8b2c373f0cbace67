#include <doctest.h>

#include <cmath>
#include <random>

#include "iat/error.hpp"
#include "iat/model/engine.hpp"
#include "iat/model/period.hpp"
#include "oracles.hpp"
#include "unit/util.hpp"

using namespace iat::model;
using iat::beliefs::Regime;

namespace {

ModelState random_state(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  ModelState s;
  s.beliefs = {u(gen), u(gen)};
  s.i_lag = u(gen);
  s.pi_lag = u(gen);
  s.x_lag = 3.0 * u(gen);
  s.u = u(gen);
  s.rstar = u(gen);
  return s;
}

double max_gap(const PeriodOutcome& o, const oracle::PeriodSolution& r) {
  return std::max({std::abs(o.pi - r.pi), std::abs(o.x - r.x), std::abs(o.i - r.i),
                   std::abs(o.e_pi_next - r.e_pi), std::abs(o.e_x_next - r.e_x)});
}

}  // namespace

TEST_CASE("period solver matches the dense oracle") {
  ModelParams p;
  p.attention.gamma_x_high = 0.4;
  std::mt19937_64 gen(2024);
  std::uniform_real_distribution<double> mpd(-0.5, 0.5);
  for (PolicyRule rule : kAllRules) {
    CAPTURE(rule_name(rule));
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
      const ModelState s = random_state(gen);
      const double mp = is_taylor(rule) ? mpd(gen) : 0.0;
      worst = std::max(worst, max_gap(solve_period(s, rule, p, mp), oracle::dense_period(s, rule, p, mp)));
    }
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("period outcome satisfies the structural equations") {
  const ModelParams p;
  std::mt19937_64 gen(7);
  for (int k = 0; k < 200; ++k) {
    const ModelState s = random_state(gen);
    const auto o = solve_period(s, PolicyRule::TaylorSmoothing, p, 0.1);
    CHECK(std::abs(o.pi - p.beta * o.e_pi_next - p.kappa * o.x - s.u) < 1e-12);
    CHECK(std::abs(o.x - o.e_x_next + p.varphi * (o.i - o.e_pi_next - s.rstar)) < 1e-12);
    CHECK(std::abs(o.i - p.rho_i * s.i_lag - (1 - p.rho_i) * (p.phi_pi * o.pi + p.phi_x * o.x) - 0.1) <
          1e-12);
    CHECK(o.loss_contrib == doctest::Approx(0.5 * (o.pi * o.pi + p.lambda_weight * o.x * o.x)));
  }
}

TEST_CASE("targeting rules hold exactly") {
  const ModelParams p;
  std::mt19937_64 gen(8);
  const double w = p.lambda_weight / p.kappa;
  for (int k = 0; k < 100; ++k) {
    const ModelState s = random_state(gen);
    const auto c = solve_period(s, PolicyRule::OptimalCommitment, p);
    CHECK(std::abs(c.pi + w * (c.x - s.x_lag)) < 1e-12);
    const auto d = solve_period(s, PolicyRule::OptimalDiscretion, p);
    CHECK(std::abs(d.pi + w * d.x) < 1e-12);
    const auto st = solve_period(s, PolicyRule::StrictTargeting, p);
    CHECK(st.pi == 0.0);
    CHECK(std::abs(p.kappa * st.x + p.beta * st.e_pi_next + s.u) < 1e-12);
  }
}

TEST_CASE("linear in the state for a pinned regime") {
  const ModelParams p;
  std::mt19937_64 gen(9);
  for (Regime r : {Regime::Low, Regime::High}) {
    SolveOptions opts;
    opts.pinned_regime = r;
    for (int k = 0; k < 50; ++k) {
      const ModelState a = random_state(gen);
      const ModelState b = random_state(gen);
      ModelState c = a;
      c.beliefs = {2 * a.beliefs.prior_pi - 3 * b.beliefs.prior_pi, 2 * a.beliefs.prior_x - 3 * b.beliefs.prior_x};
      c.i_lag = 2 * a.i_lag - 3 * b.i_lag;
      c.x_lag = 2 * a.x_lag - 3 * b.x_lag;
      c.u = 2 * a.u - 3 * b.u;
      c.rstar = 2 * a.rstar - 3 * b.rstar;
      const auto oa = solve_period(a, PolicyRule::TaylorSmoothing, p, 0.2, opts);
      const auto ob = solve_period(b, PolicyRule::TaylorSmoothing, p, -0.1, opts);
      const auto oc = solve_period(c, PolicyRule::TaylorSmoothing, p, 0.7, opts);
      CHECK(oc.regime == r);
      CHECK(std::abs(oc.pi - (2 * oa.pi - 3 * ob.pi)) < 1e-11);
      CHECK(std::abs(oc.x - (2 * oa.x - 3 * ob.x)) < 1e-11);
      CHECK(std::abs(oc.i - (2 * oa.i - 3 * ob.i)) < 1e-11);
    }
  }
}

TEST_CASE("high attention steepens the inflation response to cost-push") {
  const ModelParams p;
  for (PolicyRule rule : kAllRules) {
    if (rule == PolicyRule::StrictTargeting) continue;
    CAPTURE(rule_name(rule));
    ModelState s;
    s.u = 1.0;
    SolveOptions lo, hi;
    lo.pinned_regime = Regime::Low;
    hi.pinned_regime = Regime::High;
    const double d_lo = solve_period(s, rule, p, 0.0, lo).pi;
    const double d_hi = solve_period(s, rule, p, 0.0, hi).pi;
    CHECK(d_lo > 0.0);
    CHECK(d_hi > d_lo);
  }
}

TEST_CASE("regime follows lagged inflation by default") {
  const ModelParams p;
  ModelState s;
  s.pi_lag = 1.0;
  CHECK(solve_period(s, PolicyRule::TaylorSmoothing, p).regime == Regime::Low);
  s.pi_lag = 1.0 + 1e-12;
  CHECK(solve_period(s, PolicyRule::TaylorSmoothing, p).regime == Regime::High);
}

TEST_CASE("current-inflation timing keeps the first consistent regime") {
  const ModelParams p;
  SolveOptions opts;
  opts.timing = ThresholdTiming::CurrentInflation;
  ModelState s;
  s.u = 0.1;
  CHECK(solve_period(s, PolicyRule::TaylorSmoothing, p, 0.0, opts).regime == Regime::Low);
  s.u = 3.0;
  const auto o = solve_period(s, PolicyRule::TaylorSmoothing, p, 0.0, opts);
  CHECK(o.regime == Regime::High);
  CHECK(o.pi > p.attention.threshold);
}

TEST_CASE("singular subjective system is reported as indeterminate") {
  ModelParams p;
  p.attention.gamma_x = 1.0;
  p.phi_x = 0.0;
  p.phi_pi = p.attention.gamma_pi_low;
  ModelState s;
  try {
    solve_period(s, PolicyRule::TaylorNoSmoothing, p);
    FAIL("expected failure");
  } catch (const iat::Error& e) {
    CHECK(e.code() == iat::ErrorCode::Indeterminate);
    CHECK(has(std::string(e.what()), "phi_pi=0.18"));
  }
}

TEST_CASE("advance and shock persistence") {
  const ModelParams p;
  ModelState s;
  s.u = 1.0;
  const auto o = solve_period(s, PolicyRule::TaylorSmoothing, p);
  ModelState n = advance(s, o);
  CHECK(n.beliefs.prior_pi == o.e_pi_next);
  CHECK(n.i_lag == o.i);
  CHECK(n.pi_lag == o.pi);
  step_shocks(n, 0.5, -0.2, p);
  CHECK(n.u == doctest::Approx(0.8 + 0.5));
  CHECK(n.rstar == doctest::Approx(-0.2));
}

TEST_CASE("engine applies the mode to the parameters") {
  const ModelParams p;
  const Engine fixed(p, ExpectationMode::fixed(0.3), PolicyRule::TaylorSmoothing);
  CHECK(std::isinf(fixed.params().attention.threshold));
  CHECK(fixed.params().attention.gamma_pi_high == 0.3);
  CHECK_FALSE(fixed.fire_policy().has_value());
  const Engine fire(p, ExpectationMode::fire(), PolicyRule::TaylorSmoothing);
  CHECK(fire.fire_policy().has_value());
  ModelParams bad = p;
  bad.kappa = -1.0;
  CHECK_THROWS_AS(Engine(bad, ExpectationMode::threshold(), PolicyRule::TaylorSmoothing), iat::Error);
}

TEST_CASE("mode and rule names") {
  const ModelParams p;
  CHECK(parse_mode("fixed", p) == ExpectationMode::fixed(0.18));
  CHECK(parse_mode("fixed(0.36)", p).gamma_pi == 0.36);
  CHECK(parse_mode("fire", p).name() == "fire");
  CHECK(ExpectationMode::fixed(0.18).name() == "fixed(0.18)");
  CHECK_THROWS_AS(parse_mode("rational", p), iat::Error);
  for (PolicyRule r : kAllRules) CHECK(parse_rule(rule_name(r)) == r);
  CHECK(parse_rule("3") == PolicyRule::OptimalCommitment);
  CHECK_THROWS_AS(parse_rule("6"), iat::Error);
}
