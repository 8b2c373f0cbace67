#include "iat/experiments/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>

#include <fmt/format.h>

#include "iat/error.hpp"
#include "iat/units.hpp"

namespace iat::experiments {

namespace {

constexpr double kExplosive = 1e8;

model::ModelParams with_sigma(model::ModelParams p, double sigma) {
  p.sigma_u = sigma;
  p.sigma_r = sigma;
  return p;
}

}  // namespace

const char* switch_name(ShockSwitch s) noexcept {
  switch (s) {
    case ShockSwitch::Both: return "both";
    case ShockSwitch::SupplyOnly: return "supply-only";
    case ShockSwitch::DemandOnly: return "demand-only";
  }
  return "unknown";
}

ShockSwitch parse_switch(std::string_view name) {
  for (ShockSwitch s : {ShockSwitch::Both, ShockSwitch::SupplyOnly, ShockSwitch::DemandOnly}) {
    if (name == switch_name(s)) return s;
  }
  fail(ErrorCode::InvalidArgument, fmt::format("unknown shock switch '{}'", name));
}

ShockDraws draws_for(const SimulationOptions& opts) {
  return draw_shocks(opts.seed, opts.burn_in + opts.n_periods);
}

SimulationResult simulate(const model::Engine& engine, const ShockDraws& draws,
                          const SimulationOptions& opts, double freq_threshold) {
  require(opts.n_periods >= 2, "n_periods must be at least 2");
  const std::size_t total = opts.burn_in + opts.n_periods;
  require(draws.size() >= total, "not enough innovation draws for the horizon");
  const auto& p = engine.params();

  SimulationResult res;
  res.supply_multiplier = opts.switches == ShockSwitch::DemandOnly ? 0.0 : 1.0;
  res.demand_multiplier = opts.switches == ShockSwitch::SupplyOnly ? 0.0 : 1.0;
  res.hash_eps_u = hash_doubles(draws.eps_u);
  res.hash_eps_r = hash_doubles(draws.eps_r);
  const double sign = opts.negate_draws ? -1.0 : 1.0;
  const double scale_u = sign * res.supply_multiplier * p.sigma_u;
  const double scale_r = sign * res.demand_multiplier * p.sigma_r;

  res.path.reserve(total);
  model::ModelState s;
  double loss_sum = 0.0, disc_sum = 0.0, disc = 1.0;
  double pi_sum = 0.0, pi_sq = 0.0;
  std::size_t high = 0;
  for (std::size_t t = 0; t < total; ++t) {
    model::step_shocks(s, scale_u * draws.eps_u[t], scale_r * draws.eps_r[t], p);
    const model::PeriodOutcome o = engine.solve(s, 0.0);
    if (!std::isfinite(o.pi) || !std::isfinite(o.x) || !std::isfinite(o.i) ||
        std::abs(o.pi) > kExplosive || std::abs(o.x) > kExplosive) {
      fail(ErrorCode::Explosive, fmt::format("explosive path (mode {}, rule {}, period {})",
                                             engine.mode().name(), model::rule_name(engine.rule()), t));
    }
    if (t >= opts.burn_in) {
      loss_sum += o.loss_contrib;
      disc_sum += disc * o.loss_contrib;
      disc *= p.beta;
      pi_sum += o.pi;
      if (s.pi_lag > freq_threshold) ++high;
    }
    res.path.push_back(o);
    s = model::advance(s, o);
  }

  const auto n = static_cast<double>(opts.n_periods);
  const double mean = pi_sum / n;
  for (std::size_t t = opts.burn_in; t < total; ++t) {
    const double d = res.path[t].pi - mean;
    pi_sq += d * d;
  }
  auto& sum = res.summary;
  sum.welfare = -loss_sum / n;
  sum.welfare_discounted = -disc_sum;
  sum.mean_pi = units::annualize(mean);
  sum.sd_pi = units::annualize(std::sqrt(pi_sq / (n - 1.0)));
  sum.freq_high = static_cast<double>(high) / n;
  sum.seed = opts.seed;
  sum.n_periods = opts.n_periods;
  sum.burn_in = opts.burn_in;
  return res;
}

SimulationResult simulate(const model::ModelParams& params, model::ExpectationMode mode,
                          model::PolicyRule rule, const SimulationOptions& opts) {
  const model::Engine engine(params, mode, rule, opts.solve);
  return simulate(engine, draws_for(opts), opts, params.attention.threshold);
}

double mean_freq_high(const model::ModelParams& params, double sigma, const CalibrationOptions& opts,
                      std::vector<double>* per_seed) {
  const model::Engine engine(with_sigma(params, sigma), model::ExpectationMode::threshold(), opts.rule);
  double total = 0.0;
  if (per_seed) per_seed->clear();
  for (std::uint64_t seed : opts.seeds) {
    SimulationOptions so;
    so.seed = seed;
    so.n_periods = opts.n_periods;
    so.burn_in = opts.burn_in;
    const double f = simulate(engine, draws_for(so), so, params.attention.threshold).summary.freq_high;
    if (per_seed) per_seed->push_back(f);
    total += f;
  }
  return total / static_cast<double>(opts.seeds.size());
}

CalibrationResult calibrate_shock_volatility(const model::ModelParams& params,
                                             const CalibrationOptions& opts) {
  require(opts.target_freq_high >= 0.0 && opts.target_freq_high < 1.0,
          "target frequency must lie in [0,1)");
  require(opts.seeds.size() >= 5, "calibration needs at least 5 seeds");
  require(opts.lo > 0.0 && opts.hi > opts.lo, "bad volatility bracket");
  require(opts.tolerance > 0.0, "tolerance must be positive");

  CalibrationResult res;
  auto eval = [&](double sigma, std::vector<double>* per_seed = nullptr) {
    ++res.evaluations;
    return mean_freq_high(params, sigma, opts, per_seed) - opts.target_freq_high;
  };
  auto done = [&](double sigma) {
    res.sigma = sigma;
    res.freq_high = mean_freq_high(params, sigma, opts, &res.freq_per_seed);
    return res;
  };

  double lo = opts.lo, hi = opts.hi;
  double f_lo = eval(lo), f_hi = eval(hi);
  if (std::abs(f_lo) < opts.tolerance) return done(lo);
  if (std::abs(f_hi) < opts.tolerance) return done(hi);
  if (!(f_lo < 0.0 && f_hi > 0.0)) {
    res.widened = true;
    lo /= 10.0;
    hi *= 10.0;
    f_lo = eval(lo);
    f_hi = eval(hi);
    if (std::abs(f_lo) < opts.tolerance) return done(lo);
    if (std::abs(f_hi) < opts.tolerance) return done(hi);
    if (!(f_lo < 0.0 && f_hi > 0.0)) {
      fail(ErrorCode::NoConvergence,
           fmt::format("volatility bracket [{:g}, {:g}] does not bracket freq_high target {:g} "
                       "(reached {:g} .. {:g})",
                       lo, hi, opts.target_freq_high, f_lo + opts.target_freq_high,
                       f_hi + opts.target_freq_high));
    }
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double f = eval(mid);
    if (std::abs(f) < opts.tolerance) return done(mid);
    (f < 0.0 ? lo : hi) = mid;
    if (hi - lo < 1e-12 * hi) break;
  }
  fail(ErrorCode::NoConvergence, "non-monotone freq_high in sigma: bisection stalled");
}

std::vector<WelfareCell> welfare_table(const model::ModelParams& params, const WelfareOptions& opts) {
  params.validate();
  require(!opts.seeds.empty(), "welfare grid needs at least one seed");
  std::vector<model::ExpectationMode> modes = opts.modes;
  if (modes.empty()) {
    modes = {model::ExpectationMode::threshold(),
             model::ExpectationMode::fixed(params.attention.gamma_pi_low),
             model::ExpectationMode::fire()};
  }
  std::vector<model::PolicyRule> rules = opts.rules;
  if (rules.empty()) rules.assign(std::begin(model::kAllRules), std::end(model::kAllRules));

  // Innovations are drawn once per seed and shared by every cell.
  std::vector<ShockDraws> draws;
  std::vector<SimulationOptions> path_opts;
  for (std::uint64_t seed : opts.seeds) {
    SimulationOptions so;
    so.seed = seed;
    so.n_periods = opts.n_periods;
    so.burn_in = opts.burn_in;
    draws.push_back(draws_for(so));
    path_opts.push_back(so);
    if (opts.antithetic) {
      so.negate_draws = true;
      path_opts.push_back(so);
    }
  }
  const std::size_t per_seed = opts.antithetic ? 2 : 1;

  auto run_cell = [&](const model::ExpectationMode& mode, model::PolicyRule rule) {
    const model::Engine engine(params, mode, rule);
    WelfareCell c;
    c.mode = mode;
    c.rule = rule;
    for (std::size_t k = 0; k < path_opts.size(); ++k) {
      const auto& d = draws[k / per_seed];
      const auto s = simulate(engine, d, path_opts[k], params.attention.threshold).summary;
      c.welfare += s.welfare;
      c.welfare_discounted += s.welfare_discounted;
      c.sd_pi += s.sd_pi;
      c.mean_pi += s.mean_pi;
      c.freq_high += s.freq_high;
    }
    const auto n = static_cast<double>(path_opts.size());
    c.welfare /= n;
    c.welfare_discounted /= n;
    c.sd_pi /= n;
    c.mean_pi /= n;
    c.freq_high /= n;
    c.seed_count = opts.seeds.size();
    c.path_count = path_opts.size();
    return c;
  };

  std::vector<std::pair<model::ExpectationMode, model::PolicyRule>> jobs;
  for (const auto& m : modes) {
    for (auto r : rules) jobs.emplace_back(m, r);
  }
  std::vector<WelfareCell> cells(jobs.size());
  const unsigned workers =
      std::max(1u, opts.workers ? opts.workers : std::thread::hardware_concurrency());
  for (std::size_t start = 0; start < jobs.size(); start += workers) {
    std::vector<std::future<WelfareCell>> batch;
    const std::size_t end = std::min(jobs.size(), start + workers);
    for (std::size_t j = start; j < end; ++j) {
      batch.push_back(std::async(std::launch::async, run_cell, jobs[j].first, jobs[j].second));
    }
    for (std::size_t j = start; j < end; ++j) cells[j] = batch[j - start].get();
  }
  return cells;
}

SummaryStats summary_stats(const std::vector<double>& a, const std::vector<double>& b) {
  require(a.size() == b.size(), "series must have equal length");
  require(a.size() >= 2, "need at least 2 observations", ErrorCode::InsufficientData);
  const auto n = static_cast<double>(a.size());
  SummaryStats s;
  for (std::size_t k = 0; k < a.size(); ++k) {
    s.mean_a += a[k];
    s.mean_b += b[k];
  }
  s.mean_a /= n;
  s.mean_b /= n;
  double saa = 0.0, sbb = 0.0, sab = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double da = a[k] - s.mean_a, db = b[k] - s.mean_b;
    saa += da * da;
    sbb += db * db;
    sab += da * db;
  }
  s.sd_a = std::sqrt(saa / (n - 1.0));
  s.sd_b = std::sqrt(sbb / (n - 1.0));
  if (saa == 0.0 || sbb == 0.0) fail(ErrorCode::InvalidArgument, "correlation undefined for a constant series");
  s.correlation = sab / std::sqrt(saa * sbb);
  return s;
}

}  // namespace iat::experiments
