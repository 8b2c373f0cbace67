#include "iat/iat.h"

#include <cmath>
#include <cstring>
#include <limits>
#include <new>
#include <string>
#include <string_view>

#include "iat/beliefs.hpp"
#include "iat/cli/commands.hpp"
#include "iat/cli/config.hpp"
#include "iat/econometrics/carlson_parkin.hpp"
#include "iat/econometrics/panel.hpp"
#include "iat/econometrics/threshold.hpp"
#include "iat/error.hpp"
#include "iat/experiments/irf.hpp"
#include "iat/experiments/simulate.hpp"
#include "iat/model/engine.hpp"

struct iat_params {
  iat::model::ModelParams p;
};

struct iat_threshold_fit {
  iat::econometrics::ThresholdFit fit;
};

struct iat_path {
  std::vector<double> pi, x, i, e_pi_next, prior_pi, regime_high;
  bool simulated = false;
  iat::experiments::SimulationSummary summary;
};

struct iat_config {
  iat::cli::RunConfig cfg;
};

namespace {

thread_local std::string g_last_error;

iat_status to_status(iat::ErrorCode c) { return static_cast<iat_status>(static_cast<int>(c)); }

template <class F>
iat_status guarded(F&& f) {
  try {
    f();
    g_last_error.clear();
    return IAT_OK;
  } catch (const iat::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return IAT_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return IAT_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return IAT_ERR_INTERNAL;
  }
}

void need(const void* ptr, const char* what) {
  iat::require(ptr != nullptr, std::string(what) + " must not be null");
}

double* param_field(iat::model::ModelParams& p, std::string_view name) {
  if (name == "beta") return &p.beta;
  if (name == "kappa") return &p.kappa;
  if (name == "varphi") return &p.varphi;
  if (name == "rho_i") return &p.rho_i;
  if (name == "phi_pi") return &p.phi_pi;
  if (name == "phi_x") return &p.phi_x;
  if (name == "rho_u") return &p.rho_u;
  if (name == "sigma_u") return &p.sigma_u;
  if (name == "rho_r") return &p.rho_r;
  if (name == "sigma_r") return &p.sigma_r;
  if (name == "lambda_weight") return &p.lambda_weight;
  if (name == "threshold") return &p.attention.threshold;
  if (name == "gamma_pi_low") return &p.attention.gamma_pi_low;
  if (name == "gamma_pi_high") return &p.attention.gamma_pi_high;
  if (name == "gamma_x") return &p.attention.gamma_x;
  iat::fail(iat::ErrorCode::InvalidArgument, "unknown parameter '" + std::string(name) + "'");
}

void copy_out(const std::string& s, char* buf, size_t cap, size_t* needed) {
  if (needed) *needed = s.size() + 1;
  if (buf && cap > s.size()) {
    std::memcpy(buf, s.c_str(), s.size() + 1);
  } else if (buf || !needed) {
    iat::fail(iat::ErrorCode::InvalidArgument, "output buffer too small");
  }
}

iat_regime_summary regime_summary(const iat::econometrics::RegimeFit& r) {
  return {r.beta0, r.beta1, r.beta2, r.gamma, r.se_gamma, r.n};
}

}  // namespace

extern "C" {

const char* iat_version(void) { return IAT_VERSION; }

const char* iat_status_name(iat_status status) {
  if (status == IAT_OK) return "ok";
  return iat::error_code_name(static_cast<iat::ErrorCode>(status));
}

const char* iat_last_error(void) { return g_last_error.c_str(); }

iat_status iat_classify_regime(double pi_lag, double threshold, int* high) {
  return guarded([&] {
    need(high, "high");
    iat::beliefs::AttentionSpec spec;
    spec.threshold = threshold;
    spec.validate();
    *high = iat::beliefs::classify_regime(pi_lag, spec) == iat::beliefs::Regime::High ? 1 : 0;
  });
}

iat_status iat_update_expectation(double prior, double pi, double gamma, double* out) {
  return guarded([&] {
    need(out, "out");
    iat::require(gamma >= 0.0 && gamma <= 1.0, "gamma must lie in [0,1]");
    *out = iat::beliefs::update_inflation_expectation_with_gain(prior, pi, gamma);
  });
}

iat_status iat_optimal_attention(double info_cost, double stakes, double rho_pi, double prior_var,
                                 double* out) {
  return guarded([&] {
    need(out, "out");
    *out = iat::beliefs::optimal_attention({info_cost, stakes, rho_pi, prior_var});
  });
}

iat_status iat_carlson_parkin(double q_down, double q_same, double q_up, double a, double* mu,
                              double* sigma, int* clamped) {
  return guarded([&] {
    need(mu, "mu");
    need(sigma, "sigma");
    const auto r = iat::econometrics::carlson_parkin({q_down, q_same, q_up}, a);
    *mu = r.mu;
    *sigma = r.sigma;
    if (clamped) *clamped = r.clamped ? 1 : 0;
  });
}

iat_status iat_quarter_ahead_expectation(double e_1y, int compound, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = iat::econometrics::quarter_ahead_expectation(
        e_1y, compound ? iat::econometrics::HorizonConversion::Compound
                       : iat::econometrics::HorizonConversion::Divide);
  });
}

iat_status iat_threshold_fit_new(const double* y, const double* x_prior, const double* x_fe,
                                 const double* z, size_t n, double trim, int bootstrap_draws,
                                 uint64_t bootstrap_seed, iat_threshold_fit** out) {
  return guarded([&] {
    need(out, "out");
    need(y, "y");
    need(x_prior, "x_prior");
    need(x_fe, "x_fe");
    need(z, "z");
    iat::econometrics::RegressionDataset d;
    d.y.assign(y, y + n);
    d.x_prior.assign(x_prior, x_prior + n);
    d.x_fe.assign(x_fe, x_fe + n);
    d.z.assign(z, z + n);
    iat::econometrics::ThresholdOptions opts;
    opts.trim = trim;
    opts.bootstrap_draws = bootstrap_draws;
    opts.bootstrap_seed = bootstrap_seed;
    *out = new iat_threshold_fit{iat::econometrics::threshold_regression(d, opts)};
  });
}

iat_status iat_threshold_fit_summary(const iat_threshold_fit* fit, iat_fit_summary* out) {
  return guarded([&] {
    need(fit, "fit");
    need(out, "out");
    const auto& f = fit->fit;
    out->threshold_hat = f.threshold_hat;
    out->low = regime_summary(f.low);
    out->high = regime_summary(f.high);
    out->ssr = f.ssr;
    out->pooled_ssr = f.pooled_ssr;
    out->wald_stat = f.wald_stat;
    out->wald_p_equal_gamma = f.wald_p_equal_gamma;
    out->wald_p_bootstrap = f.wald_p_bootstrap ? *f.wald_p_bootstrap
                                               : std::numeric_limits<double>::quiet_NaN();
    out->candidates = f.candidates.size();
  });
}

void iat_threshold_fit_free(iat_threshold_fit* fit) { delete fit; }

iat_status iat_params_new_baseline(iat_params** out) {
  return guarded([&] {
    need(out, "out");
    *out = new iat_params{iat::model::ModelParams::baseline()};
  });
}

iat_status iat_params_clone(const iat_params* src, iat_params** out) {
  return guarded([&] {
    need(src, "src");
    need(out, "out");
    *out = new iat_params{src->p};
  });
}

iat_status iat_params_set(iat_params* p, const char* name, double value) {
  return guarded([&] {
    need(p, "params");
    need(name, "name");
    if (std::string_view(name) == "gamma_x_high") {
      if (std::isnan(value)) p->p.attention.gamma_x_high.reset();
      else p->p.attention.gamma_x_high = value;
      return;
    }
    *param_field(p->p, name) = value;
  });
}

iat_status iat_params_get(const iat_params* p, const char* name, double* out) {
  return guarded([&] {
    need(p, "params");
    need(name, "name");
    need(out, "out");
    if (std::string_view(name) == "gamma_x_high") {
      *out = p->p.attention.gamma_x_high ? *p->p.attention.gamma_x_high
                                         : std::numeric_limits<double>::quiet_NaN();
      return;
    }
    auto copy = p->p;
    *out = *param_field(copy, name);
  });
}

iat_status iat_params_validate(const iat_params* p) {
  return guarded([&] {
    need(p, "params");
    p->p.validate();
  });
}

void iat_params_free(iat_params* p) { delete p; }

iat_status iat_irf_new(const iat_params* p, const char* mode, const char* rule, const char* shock,
                       double impact_annualized, int horizon, iat_path** out) {
  return guarded([&] {
    need(p, "params");
    need(mode, "mode");
    need(rule, "rule");
    need(shock, "shock");
    need(out, "out");
    const iat::model::Engine engine(p->p, iat::model::parse_mode(mode, p->p), iat::model::parse_rule(rule));
    const auto irf = iat::experiments::impulse_response_to_target(
        engine, iat::experiments::parse_shock(shock), impact_annualized, horizon);
    auto* path = new iat_path;
    path->pi = irf.pi;
    path->x = irf.x;
    path->i = irf.i;
    path->e_pi_next = irf.e_pi_next;
    path->prior_pi = irf.prior_pi;
    path->regime_high.assign(irf.regime_high.begin(), irf.regime_high.end());
    *out = path;
  });
}

iat_status iat_simulate_new(const iat_params* p, const char* mode, const char* rule, uint64_t seed,
                            size_t n_periods, size_t burn_in, iat_path** out) {
  return guarded([&] {
    need(p, "params");
    need(mode, "mode");
    need(rule, "rule");
    need(out, "out");
    iat::experiments::SimulationOptions so;
    so.seed = seed;
    so.n_periods = n_periods;
    so.burn_in = burn_in;
    const auto res = iat::experiments::simulate(p->p, iat::model::parse_mode(mode, p->p),
                                                iat::model::parse_rule(rule), so);
    auto* path = new iat_path;
    double prior = 0.0;
    for (const auto& o : res.path) {
      path->pi.push_back(o.pi);
      path->x.push_back(o.x);
      path->i.push_back(o.i);
      path->e_pi_next.push_back(o.e_pi_next);
      path->prior_pi.push_back(prior);
      path->regime_high.push_back(o.regime == iat::beliefs::Regime::High ? 1.0 : 0.0);
      prior = o.e_pi_next;
    }
    path->simulated = true;
    path->summary = res.summary;
    *out = path;
  });
}

size_t iat_path_length(const iat_path* path) { return path ? path->pi.size() : 0; }

iat_status iat_path_get(const iat_path* path, const char* variable, double* buf, size_t len) {
  return guarded([&] {
    need(path, "path");
    need(variable, "variable");
    need(buf, "buf");
    const std::string_view v(variable);
    const std::vector<double>* src = v == "pi"            ? &path->pi
                                     : v == "x"           ? &path->x
                                     : v == "i"           ? &path->i
                                     : v == "e_pi_next"   ? &path->e_pi_next
                                     : v == "prior_pi"    ? &path->prior_pi
                                     : v == "regime_high" ? &path->regime_high
                                                          : nullptr;
    iat::require(src != nullptr, "unknown path variable '" + std::string(v) + "'");
    iat::require(len >= src->size(), "buffer shorter than the path");
    std::copy(src->begin(), src->end(), buf);
  });
}

iat_status iat_path_summary(const iat_path* path, iat_summary* out) {
  return guarded([&] {
    need(path, "path");
    need(out, "out");
    iat::require(path->simulated, "summary is only defined for simulated paths");
    const auto& s = path->summary;
    *out = {s.welfare, s.welfare_discounted, s.sd_pi, s.mean_pi, s.freq_high, s.n_periods, s.burn_in, s.seed};
  });
}

void iat_path_free(iat_path* path) { delete path; }

iat_status iat_config_new(iat_config** out) {
  return guarded([&] {
    need(out, "out");
    *out = new iat_config;
  });
}

iat_status iat_config_load(iat_config* cfg, const char* path) {
  return guarded([&] {
    need(cfg, "config");
    need(path, "path");
    cfg->cfg.load(path);
  });
}

iat_status iat_config_parse(iat_config* cfg, const char* text) {
  return guarded([&] {
    need(cfg, "config");
    need(text, "text");
    cfg->cfg.parse(text);
  });
}

iat_status iat_config_set(iat_config* cfg, const char* key, const char* value) {
  return guarded([&] {
    need(cfg, "config");
    need(key, "key");
    need(value, "value");
    cfg->cfg.set(key, value);
  });
}

iat_status iat_config_get(const iat_config* cfg, const char* key, char* buf, size_t cap,
                          size_t* needed) {
  return guarded([&] {
    need(cfg, "config");
    need(key, "key");
    copy_out(cfg->cfg.get(key), buf, cap, needed);
  });
}

iat_status iat_config_serialize(const iat_config* cfg, char* buf, size_t cap, size_t* needed) {
  return guarded([&] {
    need(cfg, "config");
    copy_out(cfg->cfg.serialize(), buf, cap, needed);
  });
}

void iat_config_free(iat_config* cfg) { delete cfg; }

iat_status iat_run_command(const iat_config* cfg, const char* command, const char* out_dir) {
  return guarded([&] {
    need(cfg, "config");
    need(command, "command");
    need(out_dir, "out_dir");
    iat::cli::run_and_write(cfg->cfg, command, out_dir);
  });
}

}  // extern "C"
