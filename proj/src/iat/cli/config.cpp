#include "iat/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "iat/error.hpp"
#include "iat/rng.hpp"
#include "iat/units.hpp"

namespace iat::cli {

namespace {

using K = ValueKind;

const std::vector<KeyInfo> kKeys = {
    {"units", K::Choice, "quarterly", "quarterly|annualized", "unit of rate-valued inputs"},
    {"beta", K::Double, "", "", "discount factor (default 1/(1+0.01/4))"},
    {"kappa", K::Double, "0.057", "", "Phillips-curve slope"},
    {"varphi", K::Double, "1", "", "real-rate elasticity of the output gap"},
    {"rho_i", K::Double, "0.7", "", "interest-rate smoothing"},
    {"phi_pi", K::Double, "2", "", "Taylor response to inflation"},
    {"phi_x", K::Double, "0.125", "", "Taylor response to the output gap"},
    {"rho_u", K::Double, "0.8", "", "cost-push persistence"},
    {"sigma_u", K::Double, "0.5", "", "cost-push innovation s.d. (rate)"},
    {"rho_r", K::Double, "0.8", "", "natural-rate persistence"},
    {"sigma_r", K::Double, "0.5", "", "natural-rate innovation s.d. (rate)"},
    {"lambda_weight", K::Double, "0.007", "", "output-gap weight in the loss"},
    {"threshold", K::Double, "1", "", "attention threshold (rate)"},
    {"gamma_pi_low", K::Double, "0.18", "", "inflation attention, low regime"},
    {"gamma_pi_high", K::Double, "0.36", "", "inflation attention, high regime"},
    {"gamma_x", K::Double, "0.25", "", "output-gap attention"},
    {"gamma_x_high", K::OptionalDouble, "none", "", "output-gap attention override, high regime"},
    {"timing", K::Choice, "lagged", "lagged|current", "inflation that selects the regime"},
    {"mode", K::Text, "threshold", "", "expectation mode for irf/simulate"},
    {"modes", K::TextList, "threshold,fixed,fire", "", "modes for irf/statedep/welfare"},
    {"rule", K::Text, "taylor_smoothing", "", "policy rule for irf/simulate/statedep"},
    {"rules", K::TextList, "all", "", "rules for the welfare grid"},
    {"seed", K::UInt, "1", "", "seed for simulate"},
    {"seeds", K::UIntList, "1,2,3,4,5", "", "seeds for welfare and calibrate"},
    {"n_periods", K::UInt, "10000", "", "reported simulation periods"},
    {"burn_in", K::UInt, "500", "", "discarded simulation periods"},
    {"horizon", K::UInt, "40", "", "impulse-response horizon"},
    {"shock", K::Choice, "cost_push", "cost_push|demand|monetary", "impulse shock"},
    {"impact", K::Double, "5", "", "impact inflation target, annualized pp"},
    {"innovation", K::OptionalDouble, "none", "", "raw innovation (rate); overrides impact"},
    {"switch", K::Choice, "both", "both|supply-only|demand-only", "active shocks in simulate"},
    {"antithetic", K::Bool, "true", "", "welfare grid also runs negated draws"},
    {"statedep_impact", K::Double, "3", "", "impact of each shock, annualized pp"},
    {"window_offset", K::UInt, "0", "", "first reported simulate period after burn-in"},
    {"window_length", K::UInt, "180", "", "simulate periods written to simulation.csv"},
    {"emit_survey", K::Bool, "false", "", "simulate also writes a synthetic survey"},
    {"survey_n", K::UInt, "546", "", "synthetic survey regression rows"},
    {"survey_noise", K::Double, "0.05", "", "survey updating noise s.d. (rate)"},
    {"survey_burn_in", K::UInt, "200", "", "synthetic survey burn-in"},
    {"calibrate_target", K::Double, "0.31", "", "target share of high-regime periods"},
    {"calibrate_lo", K::Double, "0.0001", "", "lower volatility bracket, quarterly pp"},
    {"calibrate_hi", K::Double, "10", "", "upper volatility bracket, quarterly pp"},
    {"calibrate_tol", K::Double, "0.005", "", "frequency tolerance"},
    {"input", K::Text, "", "", "survey CSV for estimate"},
    {"trim", K::Double, "0.15", "", "threshold-search trimming"},
    {"window_len", K::UInt, "12", "", "rolling window length"},
    {"conversion", K::Choice, "divide", "divide|compound", "one-year to quarter-ahead conversion"},
    {"bootstrap_draws", K::UInt, "0", "", "wild-bootstrap draws for the Wald p-value"},
    {"bootstrap_seed", K::UInt, "20230901", "", "bootstrap seed"},
    {"nw_lags", K::UInt, "12", "", "Newey-West lags"},
    {"within_threshold", K::Double, "4", "", "within-regime split, annualized pp"},
    {"within_variant", K::Choice, "mean", "mean|lagged", "within-regime regressor"},
    {"asad_threshold", K::Double, "4", "", "stylized example threshold"},
    {"asad_gamma_low", K::Double, "0.2", "", "stylized example low attention"},
    {"asad_gamma_high", K::Double, "0.4", "", "stylized example high attention"},
    {"asad_beta", K::Double, "0.99", "", "stylized example discount factor"},
    {"asad_kappa", K::Double, "0.6", "", "stylized example Phillips slope"},
    {"asad_phi_pi", K::Double, "1.05", "", "stylized example inflation response"},
    {"asad_u1", K::Double, "10", "", "stylized example cost-push, period 1"},
    {"asad_u2", K::Double, "10", "", "stylized example cost-push, period 2"},
    {"asad_switch", K::Bool, "true", "", "stylized example allows the regime switch"},
    {"workers", K::UInt, "0", "", "parallel workers (0: all cores)"},
};

const KeyInfo& info(std::string_view key) {
  for (const auto& k : kKeys) {
    if (k.name == key) return k;
  }
  fail(ErrorCode::InvalidArgument, fmt::format("unknown config key '{}'", key));
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_double(std::string_view key, const std::string& v) {
  double d = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), d);
  if (ec != std::errc() || ptr != v.data() + v.size() || !std::isfinite(d)) {
    fail(ErrorCode::InvalidArgument, fmt::format("{}: not a finite number: '{}'", key, v));
  }
  return d;
}

template <class T>
T parse_integral(std::string_view key, const std::string& v) {
  T n{};
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), n);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    fail(ErrorCode::InvalidArgument, fmt::format("{}: not an integer: '{}'", key, v));
  }
  return n;
}

std::string canonical(const KeyInfo& k, std::string_view raw) {
  const std::string v = trim(raw);
  switch (k.kind) {
    case K::Double: return fmt::format("{}", parse_double(k.name, v));
    case K::OptionalDouble:
      if (v == "none" || v.empty()) return "none";
      return fmt::format("{}", parse_double(k.name, v));
    case K::Int: return fmt::format("{}", parse_integral<std::int64_t>(k.name, v));
    case K::UInt: return fmt::format("{}", parse_integral<std::uint64_t>(k.name, v));
    case K::Bool:
      if (v == "true" || v == "1" || v == "yes" || v == "on") return "true";
      if (v == "false" || v == "0" || v == "no" || v == "off") return "false";
      fail(ErrorCode::InvalidArgument, fmt::format("{}: not a boolean: '{}'", k.name, v));
    case K::Text: return v;
    case K::Choice:
      for (const auto& c : split(k.choices, '|')) {
        if (c == v) return v;
      }
      fail(ErrorCode::InvalidArgument, fmt::format("{}: '{}' is not one of {}", k.name, v, k.choices));
    case K::DoubleList:
    case K::UIntList:
    case K::TextList: {
      std::vector<std::string> items;
      for (const auto& item : split(v, ',')) {
        if (item.empty()) fail(ErrorCode::InvalidArgument, fmt::format("{}: empty list item", k.name));
        if (k.kind == K::DoubleList) items.push_back(fmt::format("{}", parse_double(k.name, item)));
        else if (k.kind == K::UIntList) items.push_back(fmt::format("{}", parse_integral<std::uint64_t>(k.name, item)));
        else items.push_back(item);
      }
      return fmt::format("{}", fmt::join(items, ","));
    }
  }
  return v;
}

}  // namespace

const std::vector<KeyInfo>& config_keys() { return kKeys; }

RunConfig::RunConfig() {
  for (const auto& k : kKeys) {
    values_[std::string(k.name)] =
        k.name == "beta" ? fmt::format("{}", model::ModelParams{}.beta) : canonical(k, k.default_value);
  }
}

void RunConfig::set(std::string_view key, std::string_view value) {
  const KeyInfo& k = info(key);
  if (k.name == "beta" && trim(value).empty()) {
    values_["beta"] = fmt::format("{}", model::ModelParams{}.beta);
    return;
  }
  values_[std::string(k.name)] = canonical(k, value);
}

const std::string& RunConfig::get(std::string_view key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) fail(ErrorCode::InvalidArgument, fmt::format("unknown config key '{}'", key));
  return it->second;
}

bool RunConfig::is_default(std::string_view key) const { return get(key) == RunConfig().get(key); }

void RunConfig::parse(std::string_view text, const std::string& source) {
  std::size_t line_no = 0;
  for (const auto& raw : split(text, '\n')) {
    ++line_no;
    std::string line = raw;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[' && line.back() == ']') continue;  // section headers are cosmetic
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      fail(ErrorCode::Parse, fmt::format("{}:{}: expected key = value", source, line_no));
    }
    try {
      set(trim(std::string_view(line).substr(0, eq)), std::string_view(line).substr(eq + 1));
    } catch (const Error& e) {
      fail(ErrorCode::Parse, fmt::format("{}:{}: {}", source, line_no, e.what()));
    }
  }
}

void RunConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, fmt::format("cannot open config '{}'", path));
  std::stringstream ss;
  ss << in.rdbuf();
  parse(ss.str(), path);
}

std::string RunConfig::serialize() const {
  std::string out;
  for (const auto& k : kKeys) out += fmt::format("{} = {}\n", k.name, get(k.name));
  return out;
}

std::uint64_t RunConfig::hash() const {
  const std::string s = serialize();
  return fnv1a(s.data(), s.size());
}

double RunConfig::number(std::string_view key) const { return parse_double(key, get(key)); }

std::int64_t RunConfig::integer(std::string_view key) const {
  return parse_integral<std::int64_t>(key, get(key));
}

std::uint64_t RunConfig::unsigned_integer(std::string_view key) const {
  return parse_integral<std::uint64_t>(key, get(key));
}

bool RunConfig::flag(std::string_view key) const { return get(key) == "true"; }

std::vector<std::string> RunConfig::list(std::string_view key) const { return split(get(key), ','); }

std::vector<std::uint64_t> RunConfig::unsigned_list(std::string_view key) const {
  std::vector<std::uint64_t> out;
  for (const auto& item : list(key)) out.push_back(parse_integral<std::uint64_t>(key, item));
  return out;
}

double RunConfig::rate(std::string_view key) const {
  const double v = number(key);
  return annualized_inputs() ? units::quarterly(v) : v;
}

model::ModelParams RunConfig::model_params() const {
  model::ModelParams p;
  p.beta = number("beta");
  p.kappa = number("kappa");
  p.varphi = number("varphi");
  p.rho_i = number("rho_i");
  p.phi_pi = number("phi_pi");
  p.phi_x = number("phi_x");
  p.rho_u = number("rho_u");
  p.sigma_u = rate("sigma_u");
  p.rho_r = number("rho_r");
  p.sigma_r = rate("sigma_r");
  p.lambda_weight = number("lambda_weight");
  p.attention.threshold = rate("threshold");
  p.attention.gamma_pi_low = number("gamma_pi_low");
  p.attention.gamma_pi_high = number("gamma_pi_high");
  p.attention.gamma_x = number("gamma_x");
  if (get("gamma_x_high") != "none") p.attention.gamma_x_high = number("gamma_x_high");
  return p;
}

experiments::AsAdParams RunConfig::asad_params() const {
  experiments::AsAdParams a;
  a.threshold = number("asad_threshold");
  a.gamma_low = number("asad_gamma_low");
  a.gamma_high = number("asad_gamma_high");
  a.beta = number("asad_beta");
  a.kappa = number("asad_kappa");
  a.phi_pi = number("asad_phi_pi");
  a.u = {0.0, number("asad_u1"), number("asad_u2"), 0.0};
  a.allow_switch = flag("asad_switch");
  return a;
}

model::SolveOptions RunConfig::solve_options() const {
  model::SolveOptions o;
  o.timing = get("timing") == "current" ? model::ThresholdTiming::CurrentInflation
                                        : model::ThresholdTiming::LaggedInflation;
  return o;
}

std::vector<model::ExpectationMode> RunConfig::modes(const model::ModelParams& p) const {
  std::vector<model::ExpectationMode> out;
  for (const auto& m : list("modes")) out.push_back(model::parse_mode(m, p));
  return out;
}

std::vector<model::PolicyRule> RunConfig::rules() const {
  const auto items = list("rules");
  if (items.size() == 1 && items.front() == "all") {
    return {std::begin(model::kAllRules), std::end(model::kAllRules)};
  }
  std::vector<model::PolicyRule> out;
  for (const auto& r : items) out.push_back(model::parse_rule(r));
  return out;
}

std::vector<std::uint64_t> RunConfig::seeds() const { return unsigned_list("seeds"); }

void RunConfig::validate() const {
  const auto p = model_params();
  p.validate();
  asad_params().validate();
  model::parse_mode(get("mode"), p);
  model::parse_rule(get("rule"));
  modes(p);
  rules();
  require(!seeds().empty(), "seeds must not be empty");
  require(unsigned_integer("n_periods") >= 2, "n_periods must be at least 2");
  require(unsigned_integer("horizon") >= 1, "horizon must be at least 1");
  require(unsigned_integer("window_len") >= 6, "window_len must be at least 6");
  const double trim = number("trim");
  require(trim >= 0.0 && trim <= 0.45, "trim must lie in [0, 0.45]");
  require(number("survey_noise") >= 0.0, "survey_noise must be non-negative");
}

}  // namespace iat::cli
