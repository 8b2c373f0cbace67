// Command-line front end over the C API.
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "iat/iat.h"

namespace {

int report(iat_status st) {
  nlohmann::json err = {{"error", iat_status_name(st)}, {"status", static_cast<int>(st)},
                        {"message", iat_last_error()}};
  std::fprintf(stderr, "%s\n", err.dump().c_str());
  return st == IAT_ERR_INSUFFICIENT_DATA || st == IAT_ERR_PARSE || st == IAT_ERR_IO ? 2 : 1;
}

struct Overrides {
  std::vector<std::pair<std::string, std::string>> items;
  void add(const std::string& key, const std::string& value) { items.emplace_back(key, value); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inflation attention threshold: estimation and model experiments"};
  app.set_version_flag("--version", std::string(iat_version()));
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::string out_dir;
  std::string format = "csv";
  std::vector<std::string> sets;
  std::string seed;
  app.add_option("--config", config_path, "key = value configuration file");
  app.add_option("--out", out_dir, "output directory (default $IAT_OUT_DIR, else ./out)");
  app.add_option("--seed", seed, "random seed");
  app.add_option("--format", format, "artifact format")->check(CLI::IsMember({"csv"}));
  app.add_option("--set", sets, "override a config key: KEY=VALUE (repeatable)");

  Overrides ov;
  std::string input, mode, modes, rule, rules, shock, impact, sw, window_offset, horizon, seeds, target;
  bool emit_survey = false;

  auto* estimate = app.add_subcommand("estimate", "threshold regression and rolling attention from survey CSV");
  estimate->add_option("--input", input, "survey CSV");

  auto* irf = app.add_subcommand("irf", "impulse responses");
  irf->add_option("--modes", modes, "comma-separated expectation modes");
  irf->add_option("--rule", rule, "policy rule");
  irf->add_option("--shock", shock, "cost_push | demand | monetary");
  irf->add_option("--impact", impact, "impact inflation target, annualized pp");
  irf->add_option("--horizon", horizon, "quarters");

  auto* simulate = app.add_subcommand("simulate", "stochastic simulation");
  simulate->add_option("--mode", mode, "expectation mode");
  simulate->add_option("--rule", rule, "policy rule");
  simulate->add_option("--switch", sw, "both | supply-only | demand-only");
  simulate->add_option("--window-offset", window_offset, "first period written");
  simulate->add_flag("--emit-survey", emit_survey, "also write a synthetic survey CSV");

  auto* statedep = app.add_subcommand("statedep", "cost-push and monetary shock interaction");
  statedep->add_option("--modes", modes, "comma-separated expectation modes");
  statedep->add_option("--rule", rule, "policy rule");
  statedep->add_option("--horizon", horizon, "quarters");

  auto* welfare = app.add_subcommand("welfare", "welfare grid over modes and rules");
  welfare->add_option("--modes", modes, "comma-separated modes or 'all'");
  welfare->add_option("--rules", rules, "comma-separated rules or 'all'");
  welfare->add_option("--seeds", seeds, "comma-separated seeds");

  app.add_subcommand("asad", "stylized AS/AD example");

  auto* calibrate = app.add_subcommand("calibrate", "shock volatility for a target high-regime share");
  calibrate->add_option("--target", target, "target share of high-regime periods");
  calibrate->add_option("--seeds", seeds, "comma-separated seeds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (!seed.empty()) ov.add("seed", seed);
  if (!input.empty()) ov.add("input", input);
  if (!mode.empty()) ov.add("mode", mode);
  if (!modes.empty()) ov.add("modes", modes == "all" ? "threshold,fixed,fire" : modes);
  if (!rule.empty()) ov.add("rule", rule);
  if (!rules.empty()) ov.add("rules", rules);
  if (!shock.empty()) ov.add("shock", shock);
  if (!impact.empty()) ov.add("impact", impact);
  if (!horizon.empty()) ov.add("horizon", horizon);
  if (!sw.empty()) ov.add("switch", sw);
  if (!window_offset.empty()) ov.add("window_offset", window_offset);
  if (emit_survey) ov.add("emit_survey", "true");
  if (!seeds.empty()) ov.add("seeds", seeds);
  if (!target.empty()) ov.add("calibrate_target", target);

  iat_config* cfg = nullptr;
  iat_status st = iat_config_new(&cfg);
  if (st != IAT_OK) return report(st);
  auto cleanup = [&](int code) {
    iat_config_free(cfg);
    return code;
  };
  if (!config_path.empty() && (st = iat_config_load(cfg, config_path.c_str())) != IAT_OK) {
    return cleanup(report(st));
  }
  for (const auto& s : sets) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) {
      std::fprintf(stderr, "%s\n",
                   nlohmann::json({{"error", "invalid_argument"}, {"status", 1},
                                   {"message", "--set expects KEY=VALUE, got '" + s + "'"}})
                       .dump()
                       .c_str());
      return cleanup(1);
    }
    ov.add(s.substr(0, eq), s.substr(eq + 1));
  }
  for (const auto& [k, v] : ov.items) {
    if ((st = iat_config_set(cfg, k.c_str(), v.c_str())) != IAT_OK) return cleanup(report(st));
  }

  if (out_dir.empty()) {
    const char* env = std::getenv("IAT_OUT_DIR");
    out_dir = env && *env ? env : "out";
  }
  const std::string command = app.get_subcommands().front()->get_name();
  if ((st = iat_run_command(cfg, command.c_str(), out_dir.c_str())) != IAT_OK) {
    return cleanup(report(st));
  }
  return cleanup(0);
}
