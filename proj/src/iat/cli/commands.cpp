#include "iat/cli/commands.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "iat/econometrics/panel.hpp"
#include "iat/econometrics/rolling.hpp"
#include "iat/econometrics/threshold.hpp"
#include "iat/error.hpp"
#include "iat/experiments/asad.hpp"
#include "iat/experiments/irf.hpp"
#include "iat/experiments/simulate.hpp"
#include "iat/experiments/survey.hpp"
#include "iat/model/engine.hpp"
#include "iat/rng.hpp"
#include "iat/units.hpp"

namespace iat::cli {

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using units::annualize;

namespace {

std::string hex(std::uint64_t h) { return fmt::format("{:016x}", h); }

std::string hash_text(const std::string& s) { return hex(fnv1a(s.data(), s.size())); }

// JSON numbers rounded to the same ten significant digits as the CSVs.
ordered_json jnum(double v) {
  if (!std::isfinite(v)) return nullptr;
  return std::stod(num(v));
}

ordered_json opt_num(const std::optional<double>& v) { return v ? jnum(*v) : ordered_json(nullptr); }

ordered_json opt_int(const std::optional<int>& v) { return v ? ordered_json(*v) : ordered_json(nullptr); }

std::string jsonl(const std::vector<ordered_json>& records) {
  std::string out;
  for (const auto& r : records) out += r.dump() + "\n";
  return out;
}

ordered_json regime_json(const econometrics::RegimeFit& r) {
  const double z = 1.959963984540054;
  return {{"gamma", jnum(r.gamma)},
          {"se_gamma", jnum(r.se_gamma)},
          {"ci95", {jnum(r.gamma - z * r.se_gamma), jnum(r.gamma + z * r.se_gamma)}},
          {"n", r.n}};
}

std::string fit_row(const char* name, const econometrics::RegimeFit& r) {
  return fmt::format("{},{},{},{},{},{},{}\n", name, num(r.beta0), num(r.beta1), num(r.beta2),
                     num(r.gamma), num(r.se_gamma), r.n);
}

model::Engine engine_for(const RunConfig& cfg, const model::ModelParams& p,
                         const model::ExpectationMode& mode, model::PolicyRule rule) {
  return model::Engine(p, mode, rule, cfg.solve_options());
}

}  // namespace

std::string num(double v) {
  if (std::isnan(v)) return "NA";
  if (v == 0.0) return "0";
  return fmt::format("{:.10g}", v);
}

Artifacts cmd_estimate(const RunConfig& cfg) {
  const std::string& input = cfg.get("input");
  require(!input.empty(), "estimate needs an input CSV (input = PATH)");
  const auto mode = cfg.get("conversion") == "compound" ? econometrics::HorizonConversion::Compound
                                                        : econometrics::HorizonConversion::Divide;
  const auto panel = econometrics::read_panel_csv(input);
  const auto series = econometrics::prepare_series(panel, mode);
  std::vector<std::string> dates;
  const auto data = econometrics::build_regression_dataset(series, &dates);

  econometrics::ThresholdOptions opts;
  opts.trim = cfg.number("trim");
  opts.bootstrap_draws = static_cast<int>(cfg.unsigned_integer("bootstrap_draws"));
  opts.bootstrap_seed = cfg.unsigned_integer("bootstrap_seed");
  const auto fit = econometrics::threshold_regression(data, opts);

  Artifacts a;
  a.add("fit.csv", "regime,beta0,beta1,beta2,gamma,se_gamma,n\n" + fit_row("low", fit.low) +
                       fit_row("high", fit.high));

  std::vector<ordered_json> meta;
  meta.push_back({{"record", "threshold"},
                  {"threshold_hat", jnum(annualize(fit.threshold_hat))},
                  {"threshold_hat_quarterly", jnum(fit.threshold_hat)},
                  {"low", regime_json(fit.low)},
                  {"high", regime_json(fit.high)},
                  {"ssr", jnum(fit.ssr)},
                  {"pooled_ssr", jnum(fit.pooled_ssr)},
                  {"wald_stat", jnum(fit.wald_stat)},
                  {"wald_p_equal_gamma", jnum(fit.wald_p_equal_gamma)},
                  {"wald_p_bootstrap", opt_num(fit.wald_p_bootstrap)},
                  {"bootstrap_draws", fit.bootstrap_draws},
                  {"trim", jnum(fit.trim)},
                  {"candidates", fit.candidates.size()},
                  {"n", fit.n()},
                  {"frequency", panel.frequency == econometrics::Frequency::Monthly ? "monthly" : "quarterly"},
                  {"conversion", cfg.get("conversion")}});

  std::string rolling_csv = "window_end,gamma_hat,gamma_raw,mean_inflation,lagged_inflation\n";
  std::size_t clamped = 0;
  try {
    const auto roll = econometrics::rolling_window_attention(
        data, dates, static_cast<int>(cfg.unsigned_integer("window_len")));
    std::size_t missing = 0;
    for (std::size_t k = 0; k < roll.size(); ++k) {
      const auto& g = roll.gamma_hat[k];
      const auto& raw = roll.gamma_raw[k];
      if (!g) ++missing;
      if (g && raw && *g != *raw) ++clamped;
      rolling_csv += fmt::format("{},{},{},{},{}\n", roll.window_end_dates[k], g ? num(*g) : "NA",
                                 raw ? num(*raw) : "NA", num(roll.mean_inflation[k]),
                                 num(roll.lagged_inflation[k]));
    }
    meta.push_back({{"record", "rolling"},
                    {"window_len", cfg.unsigned_integer("window_len")},
                    {"windows", roll.size()},
                    {"missing", missing},
                    {"clamped", clamped}});

    const auto variant = cfg.get("within_variant") == "lagged" ? econometrics::WithinVariant::LaggedInflation
                                                               : econometrics::WithinVariant::MeanInflation;
    try {
      const auto w = econometrics::within_regime_regression(
          roll, cfg.number("within_threshold"), variant, static_cast<int>(cfg.unsigned_integer("nw_lags")));
      ordered_json coef = ordered_json::array(), se = ordered_json::array();
      for (int k = 0; k < 4; ++k) {
        coef.push_back(jnum(w.coef(k)));
        se.push_back(jnum(w.se(k)));
      }
      meta.push_back({{"record", "within_regime"},
                      {"variant", cfg.get("within_variant")},
                      {"threshold", jnum(cfg.number("within_threshold"))},
                      {"nw_lags", w.nw_lags},
                      {"delta", coef},
                      {"se", se},
                      {"n_windows", w.n_windows},
                      {"n_high", w.n_high}});
    } catch (const Error& e) {
      meta.push_back({{"record", "within_regime"}, {"skipped", e.what()}});
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InsufficientData) throw;
    meta.push_back({{"record", "rolling"}, {"skipped", e.what()}});
  }
  meta.push_back({{"record", "clamps"},
                  {"rolling_gamma_clamped", clamped},
                  {"carlson_parkin_eps", 1e-4},
                  {"carlson_parkin_applied", false}});
  a.add("rolling.csv", rolling_csv);
  a.add("fit_meta.jsonl", jsonl(meta));
  return a;
}

Artifacts cmd_irf(const RunConfig& cfg) {
  const auto p = cfg.model_params();
  const auto rule = model::parse_rule(cfg.get("rule"));
  const auto shock = experiments::parse_shock(cfg.get("shock"));
  const int horizon = static_cast<int>(cfg.unsigned_integer("horizon"));
  std::string csv = "t,variable,value,scenario\n";
  std::vector<ordered_json> meta;
  for (const auto& mode : cfg.modes(p)) {
    const auto engine = engine_for(cfg, p, mode, rule);
    const auto irf = cfg.get("innovation") == "none"
                         ? experiments::impulse_response_to_target(engine, shock, cfg.number("impact"), horizon)
                         : experiments::impulse_response(engine, shock, cfg.rate("innovation"), horizon);
    const auto fe = experiments::forecast_error_paths(irf);
    const std::string scenario =
        fmt::format("{}/{}/{}", mode.name(), model::rule_name(rule), experiments::shock_name(shock));
    for (int t = 0; t < horizon; ++t) {
      const auto k = static_cast<std::size_t>(t);
      const std::pair<const char*, double> rows[] = {
          {"pi", annualize(irf.pi[k])},
          {"x", irf.x[k]},
          {"i", annualize(irf.i[k])},
          {"e_pi_next", annualize(irf.e_pi_next[k])},
          {"prior_pi", annualize(irf.prior_pi[k])},
          {"forecast_error", annualize(fe.errors[k])},
          {"regime_high", static_cast<double>(irf.regime_high[k])}};
      for (const auto& [name, value] : rows) csv += fmt::format("{},{},{},{}\n", t, name, num(value), scenario);
    }
    const auto hl = experiments::half_life(irf);
    meta.push_back({{"scenario", scenario},
                    {"innovation", jnum(irf.innovation)},
                    {"impact_target", opt_num(irf.impact_target)},
                    {"half_life", opt_int(hl)},
                    {"forecast_error_sign_changes", fe.sign_changes},
                    {"first_negative_forecast_error", opt_int(fe.first_negative)}});
  }
  Artifacts a;
  a.add("irf.csv", csv);
  a.add("irf_meta.jsonl", jsonl(meta));
  return a;
}

Artifacts cmd_simulate(const RunConfig& cfg) {
  const auto p = cfg.model_params();
  const auto mode = model::parse_mode(cfg.get("mode"), p);
  const auto rule = model::parse_rule(cfg.get("rule"));
  experiments::SimulationOptions so;
  so.seed = cfg.unsigned_integer("seed");
  so.n_periods = cfg.unsigned_integer("n_periods");
  so.burn_in = cfg.unsigned_integer("burn_in");
  so.switches = experiments::parse_switch(cfg.get("switch"));
  so.solve = cfg.solve_options();
  const auto engine = engine_for(cfg, p, mode, rule);
  const auto res = experiments::simulate(engine, experiments::draws_for(so), so, p.attention.threshold);

  const std::size_t offset = cfg.unsigned_integer("window_offset");
  const std::size_t length = cfg.unsigned_integer("window_length");
  require(offset < so.n_periods, "window_offset beyond the simulated horizon");
  const std::size_t end = std::min(so.n_periods, offset + length);
  std::string csv = "t,pi,x,i,e_pi_next,u,rstar,regime_high\n";
  for (std::size_t t = offset; t < end; ++t) {
    const auto& o = res.path[so.burn_in + t];
    csv += fmt::format("{},{},{},{},{},{},{},{}\n", t, num(annualize(o.pi)), num(o.x), num(annualize(o.i)),
                       num(annualize(o.e_pi_next)), num(annualize(o.u)), num(annualize(o.rstar)),
                       o.regime == beliefs::Regime::High ? 1 : 0);
  }
  const auto& s = res.summary;
  ordered_json summary = {{"mode", mode.name()},
                          {"rule", model::rule_name(rule)},
                          {"switch", cfg.get("switch")},
                          {"seed", s.seed},
                          {"n_periods", s.n_periods},
                          {"burn_in", s.burn_in},
                          {"welfare", jnum(s.welfare)},
                          {"welfare_discounted", jnum(s.welfare_discounted)},
                          {"sd_pi", jnum(s.sd_pi)},
                          {"mean_pi", jnum(s.mean_pi)},
                          {"freq_high", jnum(s.freq_high)},
                          {"crn_audit",
                           {{"eps_u_hash", hex(res.hash_eps_u)},
                            {"eps_r_hash", hex(res.hash_eps_r)},
                            {"supply_multiplier", res.supply_multiplier},
                            {"demand_multiplier", res.demand_multiplier}}}};
  Artifacts a;
  a.add("simulation.csv", csv);
  a.add("simulation_summary.json", summary.dump(2) + "\n");

  if (cfg.flag("emit_survey")) {
    experiments::SurveyOptions sv;
    sv.n = cfg.unsigned_integer("survey_n");
    sv.burn_in = cfg.unsigned_integer("survey_burn_in");
    sv.seed = so.seed;
    sv.noise_sd = cfg.rate("survey_noise");
    const auto survey = experiments::synthetic_survey(p, sv);
    std::string sc = "date,expected_inflation_1y,qoq_inflation\n";
    for (std::size_t k = 0; k < survey.dates.size(); ++k) {
      sc += fmt::format("{},{},{}\n", survey.dates[k], num(annualize(survey.expectation[k])),
                        num(survey.inflation[k]));
    }
    a.add("survey.csv", sc);
    ordered_json truth = {{"threshold", jnum(annualize(p.attention.threshold))},
                          {"gamma_low", jnum(p.attention.gamma_pi_low)},
                          {"gamma_high", jnum(p.attention.gamma_pi_high)},
                          {"noise_sd_quarterly", jnum(sv.noise_sd)},
                          {"rows", survey.data.size()},
                          {"seed", sv.seed}};
    a.add("survey_truth.json", truth.dump(2) + "\n");
  }
  return a;
}

Artifacts cmd_statedep(const RunConfig& cfg) {
  const auto p = cfg.model_params();
  const auto rule = model::parse_rule(cfg.get("rule"));
  const int horizon = static_cast<int>(cfg.unsigned_integer("horizon"));
  std::string csv = "mode,t,mp_only,cp_only,both,interaction\n";
  std::vector<ordered_json> meta;
  for (const auto& mode : cfg.modes(p)) {
    const auto r = experiments::state_dependency(engine_for(cfg, p, mode, rule),
                                                 cfg.number("statedep_impact"), horizon);
    for (int t = 0; t < horizon; ++t) {
      const auto k = static_cast<std::size_t>(t);
      csv += fmt::format("{},{},{},{},{},{}\n", mode.name(), t, num(r.path_mp_only[k]), num(r.path_cp_only[k]),
                         num(r.path_both[k]), num(r.interaction[k]));
    }
    meta.push_back({{"mode", mode.name()},
                    {"rule", model::rule_name(rule)},
                    {"peak_interaction", jnum(r.peak_interaction)},
                    {"peak_period", r.peak_period},
                    {"eps_cost_push", jnum(r.eps_cost_push)},
                    {"eps_monetary", jnum(r.eps_monetary)}});
  }
  Artifacts a;
  a.add("statedep.csv", csv);
  a.add("statedep_meta.jsonl", jsonl(meta));
  return a;
}

Artifacts cmd_welfare(const RunConfig& cfg) {
  const auto p = cfg.model_params();
  experiments::WelfareOptions wo;
  wo.modes = cfg.modes(p);
  wo.rules = cfg.rules();
  wo.seeds = cfg.seeds();
  wo.n_periods = cfg.unsigned_integer("n_periods");
  wo.burn_in = cfg.unsigned_integer("burn_in");
  wo.antithetic = cfg.flag("antithetic");
  wo.workers = static_cast<unsigned>(cfg.unsigned_integer("workers"));
  std::string csv = "mode,rule,welfare,sd_pi,mean_pi,freq_high,seed_count,welfare_discounted,path_count\n";
  for (const auto& c : experiments::welfare_table(p, wo)) {
    csv += fmt::format("{},{},{},{},{},{},{},{},{}\n", c.mode.name(), model::rule_name(c.rule), num(c.welfare),
                       num(c.sd_pi), num(c.mean_pi), num(c.freq_high), c.seed_count,
                       num(c.welfare_discounted), c.path_count);
  }
  Artifacts a;
  a.add("welfare_grid.csv", csv);
  return a;
}

Artifacts cmd_asad(const RunConfig& cfg) {
  const auto params = cfg.asad_params();
  const auto curves = experiments::asad_example(params);
  std::string csv = "period,curve,slope,intercept,eq_pi,eq_x\n";
  auto row = [&](const experiments::AsAdCurves& c, const char* name, const experiments::Line& l) {
    csv += fmt::format("{},{},{},{},{},{}\n", c.period, name, num(l.slope), num(l.intercept), num(c.eq_pi),
                       num(c.eq_x));
  };
  for (const auto& c : curves) {
    row(c, "AS", c.as);
    row(c, "AD", c.ad);
    if (c.as_no_switch) row(c, "AS_no_switch", *c.as_no_switch);
    if (c.ad_no_switch) row(c, "AD_no_switch", *c.ad_no_switch);
  }
  auto fixed = params;
  fixed.allow_switch = false;
  const auto no_switch = experiments::asad_example(fixed);
  ordered_json summary = {
      {"growth_1_to_2", jnum(experiments::inflation_growth_1_to_2(curves))},
      {"growth_1_to_2_no_switch", jnum(experiments::inflation_growth_1_to_2(no_switch))},
      {"output_gap_2", jnum(curves[2].eq_x)},
      {"output_gap_2_no_switch", jnum(no_switch[2].eq_x)}};
  Artifacts a;
  a.add("asad.csv", csv);
  a.add("asad_summary.json", summary.dump(2) + "\n");
  return a;
}

Artifacts cmd_calibrate(const RunConfig& cfg) {
  const auto p = cfg.model_params();
  experiments::CalibrationOptions co;
  co.target_freq_high = cfg.number("calibrate_target");
  co.seeds = cfg.seeds();
  co.n_periods = cfg.unsigned_integer("n_periods");
  co.burn_in = cfg.unsigned_integer("burn_in");
  co.lo = cfg.number("calibrate_lo");
  co.hi = cfg.number("calibrate_hi");
  co.tolerance = cfg.number("calibrate_tol");
  co.rule = model::parse_rule(cfg.get("rule"));
  const auto r = experiments::calibrate_shock_volatility(p, co);
  std::string csv = "sigma,sigma_annualized,freq_high,target,evaluations,widened\n";
  csv += fmt::format("{},{},{},{},{},{}\n", num(r.sigma), num(annualize(r.sigma)), num(r.freq_high),
                     num(co.target_freq_high), r.evaluations, r.widened ? "true" : "false");
  std::string seeds_csv = "seed,freq_high\n";
  for (std::size_t k = 0; k < co.seeds.size(); ++k) {
    seeds_csv += fmt::format("{},{}\n", co.seeds[k], num(r.freq_per_seed[k]));
  }
  Artifacts a;
  a.add("calibration.csv", csv);
  a.add("calibration_seeds.csv", seeds_csv);
  return a;
}

Artifacts run_command(const RunConfig& cfg, std::string_view command) {
  cfg.validate();
  if (command == "estimate") return cmd_estimate(cfg);
  if (command == "irf") return cmd_irf(cfg);
  if (command == "simulate") return cmd_simulate(cfg);
  if (command == "statedep") return cmd_statedep(cfg);
  if (command == "welfare") return cmd_welfare(cfg);
  if (command == "asad") return cmd_asad(cfg);
  if (command == "calibrate") return cmd_calibrate(cfg);
  fail(ErrorCode::InvalidArgument, fmt::format("unknown command '{}'", command));
}

std::string manifest_json(const RunConfig& cfg, std::string_view command, const Artifacts& a) {
  ordered_json artifacts = ordered_json::object();
  for (const auto& [name, content] : a.files) artifacts[name] = hash_text(content);
  ordered_json m = {{"command", command},
                    {"version", IAT_VERSION},
                    {"seed", cfg.unsigned_integer("seed")},
                    {"seeds", cfg.seeds()},
                    {"config_hash", hex(cfg.hash())},
                    {"config", cfg.serialize()},
                    {"artifacts", artifacts}};
  return m.dump(2) + "\n";
}

void run_and_write(const RunConfig& cfg, std::string_view command, const std::string& out_dir) {
  const Artifacts a = run_command(cfg, command);
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) fail(ErrorCode::Io, fmt::format("cannot create output directory '{}': {}", out_dir, ec.message()));
  auto write = [&](const std::string& name, const std::string& content) {
    const fs::path path = fs::path(out_dir) / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
    if (!out) fail(ErrorCode::Io, fmt::format("cannot write '{}'", path.string()));
  };
  for (const auto& [name, content] : a.files) write(name, content);
  write("manifest.json", manifest_json(cfg, command, a));
}

}  // namespace iat::cli
