#include <doctest.h>

#include "iat/cli/commands.hpp"
#include "iat/cli/config.hpp"
#include "iat/error.hpp"
#include "unit/util.hpp"

using namespace iat::cli;

TEST_CASE("serialize and parse round trip") {
  RunConfig a;
  a.set("kappa", "0.0570");
  a.set("seeds", "3, 4,5");
  a.set("gamma_x_high", "0.5");
  a.set("mode", "fixed(0.36)");
  RunConfig b;
  b.parse(a.serialize());
  CHECK(b.serialize() == a.serialize());
  CHECK(b.hash() == a.hash());
  CHECK(b.get("kappa") == "0.057");
  CHECK(b.seeds() == std::vector<std::uint64_t>{3, 4, 5});
  CHECK(b.model_params().attention.gamma_x_high.value() == 0.5);
  CHECK(RunConfig().hash() != a.hash());
}

TEST_CASE("parse errors name the line") {
  RunConfig c;
  try {
    c.parse("# comment\n[model]\nkappa = 0.05\nbogus = 1\n", "run.toml");
    FAIL("expected failure");
  } catch (const iat::Error& e) {
    CHECK(e.code() == iat::ErrorCode::Parse);
    CHECK(has(std::string(e.what()), "run.toml:4"));
    CHECK(has(std::string(e.what()), "bogus"));
  }
  CHECK_THROWS_AS(c.parse("kappa 0.05\n"), iat::Error);
  CHECK_THROWS_AS(c.set("kappa", "abc"), iat::Error);
  CHECK_THROWS_AS(c.set("timing", "sometimes"), iat::Error);
  CHECK_THROWS_AS(c.set("unknown_key", "1"), iat::Error);
}

TEST_CASE("annualized units convert rate-valued keys") {
  RunConfig c;
  c.set("units", "annualized");
  c.set("threshold", "4");
  c.set("sigma_u", "2");
  const auto p = c.model_params();
  CHECK(p.attention.threshold == 1.0);
  CHECK(p.sigma_u == 0.5);
  CHECK(p.kappa == 0.057);
  RunConfig q;
  CHECK(q.model_params().attention.threshold == 1.0);
  CHECK(q.model_params().beta == doctest::Approx(1.0 / 1.0025));
}

TEST_CASE("list keys") {
  RunConfig c;
  CHECK(c.rules().size() == 5);
  c.set("rules", "taylor_smoothing,strict_targeting");
  CHECK(c.rules().size() == 2);
  const auto modes = c.modes(c.model_params());
  REQUIRE(modes.size() == 3);
  CHECK(modes[1].gamma_pi == 0.18);
}

TEST_CASE("validation catches bad combinations") {
  RunConfig c;
  c.set("gamma_pi_high", "1.5");
  CHECK_THROWS_AS(c.validate(), iat::Error);
  RunConfig d;
  CHECK_THROWS_AS(run_command(d, "estimate"), iat::Error);
  CHECK_THROWS_AS(run_command(d, "fly"), iat::Error);
}

TEST_CASE("number formatting") {
  CHECK(num(0.0) == "0");
  CHECK(num(-0.0) == "0");
  CHECK(num(std::nan("")) == "NA");
  CHECK(num(1.0 / 3.0) == "0.3333333333");
}

TEST_CASE("asad command output is deterministic") {
  RunConfig c;
  const auto a = run_command(c, "asad");
  const auto b = run_command(c, "asad");
  REQUIRE(a.files.size() == b.files.size());
  for (std::size_t k = 0; k < a.files.size(); ++k) CHECK(a.files[k].second == b.files[k].second);
  CHECK(manifest_json(c, "asad", a) == manifest_json(c, "asad", b));
  CHECK(a.files[0].second.rfind("period,curve,slope,intercept,eq_pi,eq_x\n", 0) == 0);
}
