#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <string>
#include <vector>

#include "iat/iat.h"

namespace {

std::string last_error() { return iat_last_error(); }

// Deterministic two-regime updating data without the library's RNG.
struct Rows {
  std::vector<double> y, prior, fe, z;
};

Rows make_rows(std::size_t n) {
  Rows r;
  std::uint64_t state = 88172645463325252ULL;
  auto unif = [&] {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return static_cast<double>(state >> 11) / 9007199254740992.0 - 0.5;
  };
  for (std::size_t t = 0; t < n; ++t) {
    const double z = 4.0 * unif();
    const double p = 1.0 + unif();
    const double f = 2.0 * unif();
    const double g = z <= 0.3 ? 0.2 : 0.45;
    r.z.push_back(z);
    r.prior.push_back(p);
    r.fe.push_back(f);
    r.y.push_back(p + g * f + 0.01 * unif());
  }
  return r;
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::strlen(iat_version()) > 0);
  CHECK(std::string(iat_status_name(IAT_OK)) == "ok");
  CHECK(std::string(iat_status_name(IAT_ERR_PARSE)) == "parse");
  CHECK(std::string(iat_status_name(IAT_ERR_INSUFFICIENT_DATA)) == "insufficient_data");
}

TEST_CASE("belief helpers") {
  int high = -1;
  REQUIRE(iat_classify_regime(1.0, 1.0, &high) == IAT_OK);
  CHECK(high == 0);
  REQUIRE(iat_classify_regime(1.5, 1.0, &high) == IAT_OK);
  CHECK(high == 1);
  double v = 0.0;
  REQUIRE(iat_update_expectation(1.0, 2.0, 0.25, &v) == IAT_OK);
  CHECK(v == doctest::Approx(1.25));
  CHECK(iat_update_expectation(1.0, 2.0, 1.5, &v) == IAT_ERR_INVALID_ARGUMENT);
  REQUIRE(iat_optimal_attention(1.0, 1.0, 1.0, 1.0, &v) == IAT_OK);
  CHECK(v == doctest::Approx(0.5));
  CHECK(iat_classify_regime(1.0, 1.0, nullptr) == IAT_ERR_INVALID_ARGUMENT);
  CHECK(!last_error().empty());
}

TEST_CASE("conversions") {
  double mu = 0.0, sigma = 0.0;
  int clamped = -1;
  REQUIRE(iat_carlson_parkin(0.25, 0.5, 0.25, 0.5, &mu, &sigma, &clamped) == IAT_OK);
  CHECK(std::abs(mu) < 1e-12);
  CHECK(sigma == doctest::Approx(0.5 / 0.6744897501960817));
  CHECK(clamped == 0);
  CHECK(iat_carlson_parkin(0.5, 0.5, 0.5, 0.5, &mu, &sigma, &clamped) == IAT_ERR_INVALID_ARGUMENT);
  double q = 0.0;
  REQUIRE(iat_quarter_ahead_expectation(4.0, 0, &q) == IAT_OK);
  CHECK(q == 1.0);
  REQUIRE(iat_quarter_ahead_expectation(4.0, 1, &q) == IAT_OK);
  CHECK(q < 1.0);
}

TEST_CASE("threshold fit") {
  const auto r = make_rows(300);
  iat_threshold_fit* fit = nullptr;
  REQUIRE(iat_threshold_fit_new(r.y.data(), r.prior.data(), r.fe.data(), r.z.data(), r.y.size(),
                                0.15, 0, 1, &fit) == IAT_OK);
  iat_fit_summary s{};
  REQUIRE(iat_threshold_fit_summary(fit, &s) == IAT_OK);
  CHECK(s.threshold_hat == doctest::Approx(0.3).epsilon(0.1));
  CHECK(s.low.gamma == doctest::Approx(0.2).epsilon(0.05));
  CHECK(s.high.gamma == doctest::Approx(0.45).epsilon(0.05));
  CHECK(s.low.n + s.high.n == 300);
  CHECK(std::isnan(s.wald_p_bootstrap));
  CHECK(s.ssr <= s.pooled_ssr);
  CHECK(s.wald_p_equal_gamma < 1e-6);
  iat_threshold_fit_free(fit);

  iat_threshold_fit* small = nullptr;
  CHECK(iat_threshold_fit_new(r.y.data(), r.prior.data(), r.fe.data(), r.z.data(), 10, 0.15, 0, 1,
                              &small) == IAT_ERR_INSUFFICIENT_DATA);
  CHECK(small == nullptr);
  CHECK(last_error().find("30") != std::string::npos);
  iat_threshold_fit_free(nullptr);
}

TEST_CASE("parameter handles") {
  iat_params* p = nullptr;
  REQUIRE(iat_params_new_baseline(&p) == IAT_OK);
  double v = 0.0;
  REQUIRE(iat_params_get(p, "kappa", &v) == IAT_OK);
  CHECK(v == 0.057);
  REQUIRE(iat_params_get(p, "gamma_x_high", &v) == IAT_OK);
  CHECK(std::isnan(v));
  CHECK(iat_params_set(p, "not_a_param", 1.0) == IAT_ERR_INVALID_ARGUMENT);

  iat_params* q = nullptr;
  REQUIRE(iat_params_clone(p, &q) == IAT_OK);
  REQUIRE(iat_params_set(q, "gamma_pi_high", 2.0) == IAT_OK);
  CHECK(iat_params_validate(q) == IAT_ERR_INVALID_ARGUMENT);
  CHECK(iat_params_validate(p) == IAT_OK);
  iat_params_free(q);
  iat_params_free(p);
}

TEST_CASE("impulse responses and simulations") {
  iat_params* p = nullptr;
  REQUIRE(iat_params_new_baseline(&p) == IAT_OK);

  iat_path* irf = nullptr;
  REQUIRE(iat_irf_new(p, "threshold", "taylor_smoothing", "cost_push", 5.0, 40, &irf) == IAT_OK);
  REQUIRE(iat_path_length(irf) == 40);
  std::vector<double> pi(40), regime(40);
  REQUIRE(iat_path_get(irf, "pi", pi.data(), pi.size()) == IAT_OK);
  REQUIRE(iat_path_get(irf, "regime_high", regime.data(), regime.size()) == IAT_OK);
  CHECK(std::abs(4.0 * pi[0] - 5.0) < 1e-8);
  CHECK(regime[1] == 1.0);
  CHECK(iat_path_get(irf, "pi", pi.data(), 3) == IAT_ERR_INVALID_ARGUMENT);
  CHECK(iat_path_get(irf, "nonsense", pi.data(), pi.size()) == IAT_ERR_INVALID_ARGUMENT);
  iat_summary s{};
  CHECK(iat_path_summary(irf, &s) == IAT_ERR_INVALID_ARGUMENT);
  iat_path_free(irf);

  CHECK(iat_irf_new(p, "oracle", "taylor_smoothing", "cost_push", 5.0, 40, &irf) ==
        IAT_ERR_INVALID_ARGUMENT);

  iat_path* sim = nullptr;
  REQUIRE(iat_simulate_new(p, "fire", "strict_targeting", 3, 1000, 100, &sim) == IAT_OK);
  CHECK(iat_path_length(sim) == 1100);
  REQUIRE(iat_path_summary(sim, &s) == IAT_OK);
  CHECK(s.sd_pi == 0.0);
  CHECK(s.welfare < 0.0);
  CHECK(s.seed == 3);
  CHECK(s.n_periods == 1000);
  iat_path_free(sim);

  REQUIRE(iat_params_set(p, "phi_pi", 0.5) == IAT_OK);
  REQUIRE(iat_params_set(p, "phi_x", 0.0) == IAT_OK);
  CHECK(iat_simulate_new(p, "fire", "taylor_no_smoothing", 1, 100, 10, &sim) == IAT_ERR_EXPLOSIVE);
  iat_params_free(p);
}

TEST_CASE("configuration handles") {
  iat_config* c = nullptr;
  REQUIRE(iat_config_new(&c) == IAT_OK);
  REQUIRE(iat_config_set(c, "seed", "11") == IAT_OK);
  char buf[8];
  size_t needed = 0;
  REQUIRE(iat_config_get(c, "seed", buf, sizeof buf, &needed) == IAT_OK);
  CHECK(std::string(buf) == "11");
  CHECK(needed == 3);
  CHECK(iat_config_get(c, "modes", buf, 2, &needed) == IAT_ERR_INVALID_ARGUMENT);
  CHECK(needed > 2);
  CHECK(iat_config_set(c, "bogus", "1") == IAT_ERR_INVALID_ARGUMENT);
  CHECK(iat_config_parse(c, "kappa = 0.06\nnot a line\n") == IAT_ERR_PARSE);
  CHECK(iat_config_load(c, "/nonexistent/run.toml") == IAT_ERR_IO);

  REQUIRE(iat_config_serialize(c, nullptr, 0, &needed) == IAT_OK);
  std::vector<char> text(needed);
  REQUIRE(iat_config_serialize(c, text.data(), text.size(), &needed) == IAT_OK);
  CHECK(std::string(text.data()).find("seed = 11\n") != std::string::npos);

  const auto dir = std::filesystem::temp_directory_path() / "iat_capi_asad";
  std::filesystem::remove_all(dir);
  REQUIRE(iat_run_command(c, "asad", dir.c_str()) == IAT_OK);
  CHECK(std::filesystem::exists(dir / "asad.csv"));
  CHECK(std::filesystem::exists(dir / "manifest.json"));
  CHECK(iat_run_command(c, "unknown", dir.c_str()) == IAT_ERR_INVALID_ARGUMENT);
  iat_config_free(c);
}
