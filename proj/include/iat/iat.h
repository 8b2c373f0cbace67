/* C interface to the inflation-attention library.
 *
 * Every function returns an iat_status; on failure iat_last_error() holds
 * a message for the calling thread. Handles are opaque and must be released
 * with their matching *_free function. Rates are quarterly percentage points
 * unless a name says otherwise.
 */
#ifndef IAT_IAT_H
#define IAT_IAT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define IAT_API __declspec(dllexport)
#else
#define IAT_API __attribute__((visibility("default")))
#endif

typedef enum iat_status {
  IAT_OK = 0,
  IAT_ERR_INVALID_ARGUMENT = 1,
  IAT_ERR_SINGULAR = 2,
  IAT_ERR_INDETERMINATE = 3,
  IAT_ERR_EXPLOSIVE = 4,
  IAT_ERR_INSUFFICIENT_DATA = 5,
  IAT_ERR_PARSE = 6,
  IAT_ERR_IO = 7,
  IAT_ERR_NO_CONVERGENCE = 8,
  IAT_ERR_INTERNAL = 99
} iat_status;

IAT_API const char* iat_version(void);
IAT_API const char* iat_status_name(iat_status status);
/* Message of the last failure on this thread; "" after a success. */
IAT_API const char* iat_last_error(void);

/* ---- beliefs ---------------------------------------------------------- */

/* *high = 1 when pi_lag > threshold. */
IAT_API iat_status iat_classify_regime(double pi_lag, double threshold, int* high);
/* (1 - gamma) prior + gamma pi under random-walk perceptions. */
IAT_API iat_status iat_update_expectation(double prior, double pi, double gamma, double* out);
IAT_API iat_status iat_optimal_attention(double info_cost, double stakes, double rho_pi,
                                         double prior_var, double* out);

/* ---- econometrics ----------------------------------------------------- */

IAT_API iat_status iat_carlson_parkin(double q_down, double q_same, double q_up, double a,
                                      double* mu, double* sigma, int* clamped);
/* compound = 0: e / 4; otherwise ((1 + e/100)^(1/4) - 1) 100. */
IAT_API iat_status iat_quarter_ahead_expectation(double e_1y, int compound, double* out);

typedef struct iat_threshold_fit iat_threshold_fit;

typedef struct iat_regime_summary {
  double beta0, beta1, beta2, gamma, se_gamma;
  size_t n;
} iat_regime_summary;

typedef struct iat_fit_summary {
  double threshold_hat; /* same unit as z */
  iat_regime_summary low;
  iat_regime_summary high;
  double ssr;
  double pooled_ssr;
  double wald_stat;
  double wald_p_equal_gamma;
  double wald_p_bootstrap; /* NaN when no bootstrap was run */
  size_t candidates;
} iat_fit_summary;

/* Two-regime threshold regression on n rows. bootstrap_draws = 0 skips the
 * wild-bootstrap p-value. */
IAT_API iat_status iat_threshold_fit_new(const double* y, const double* x_prior, const double* x_fe,
                                         const double* z, size_t n, double trim, int bootstrap_draws,
                                         uint64_t bootstrap_seed, iat_threshold_fit** out);
IAT_API iat_status iat_threshold_fit_summary(const iat_threshold_fit* fit, iat_fit_summary* out);
IAT_API void iat_threshold_fit_free(iat_threshold_fit* fit);

/* ---- model ------------------------------------------------------------ */

typedef struct iat_params iat_params;

IAT_API iat_status iat_params_new_baseline(iat_params** out);
IAT_API iat_status iat_params_clone(const iat_params* src, iat_params** out);
/* Names: beta kappa varphi rho_i phi_pi phi_x rho_u sigma_u rho_r sigma_r
 * lambda_weight threshold gamma_pi_low gamma_pi_high gamma_x gamma_x_high. */
IAT_API iat_status iat_params_set(iat_params* p, const char* name, double value);
IAT_API iat_status iat_params_get(const iat_params* p, const char* name, double* out);
IAT_API iat_status iat_params_validate(const iat_params* p);
IAT_API void iat_params_free(iat_params* p);

/* Modes: "threshold", "fire", "fixed", "fixed(g)". Rules:
 * taylor_smoothing taylor_no_smoothing commitment discretion strict_targeting. */

typedef struct iat_path iat_path;

typedef struct iat_summary {
  double welfare;            /* -mean per-period loss */
  double welfare_discounted; /* -discounted loss sum */
  double sd_pi;              /* annualized pp */
  double mean_pi;            /* annualized pp */
  double freq_high;
  size_t n_periods;
  size_t burn_in;
  uint64_t seed;
} iat_summary;

/* Impulse response to a shock ("cost_push", "demand", "monetary") scaled so
 * period-0 inflation equals impact_annualized. */
IAT_API iat_status iat_irf_new(const iat_params* p, const char* mode, const char* rule,
                               const char* shock, double impact_annualized, int horizon,
                               iat_path** out);
/* Stochastic simulation; burn-in periods are part of the stored path. */
IAT_API iat_status iat_simulate_new(const iat_params* p, const char* mode, const char* rule,
                                    uint64_t seed, size_t n_periods, size_t burn_in,
                                    iat_path** out);
IAT_API size_t iat_path_length(const iat_path* path);
/* Variables: pi x i e_pi_next prior_pi regime_high (quarterly pp). */
IAT_API iat_status iat_path_get(const iat_path* path, const char* variable, double* buf, size_t len);
/* Only for simulated paths. */
IAT_API iat_status iat_path_summary(const iat_path* path, iat_summary* out);
IAT_API void iat_path_free(iat_path* path);

/* ---- configuration and commands --------------------------------------- */

typedef struct iat_config iat_config;

IAT_API iat_status iat_config_new(iat_config** out);
IAT_API iat_status iat_config_load(iat_config* cfg, const char* path);
IAT_API iat_status iat_config_parse(iat_config* cfg, const char* text);
IAT_API iat_status iat_config_set(iat_config* cfg, const char* key, const char* value);
/* Copies a NUL-terminated value into buf when cap is large enough; *needed
 * receives the required size including the terminator. buf = NULL with a
 * non-NULL needed only queries the size. A short buffer is an error. */
IAT_API iat_status iat_config_get(const iat_config* cfg, const char* key, char* buf, size_t cap,
                                  size_t* needed);
IAT_API iat_status iat_config_serialize(const iat_config* cfg, char* buf, size_t cap, size_t* needed);
IAT_API void iat_config_free(iat_config* cfg);

/* Runs estimate, irf, simulate, statedep, welfare, asad or calibrate and
 * writes its artifacts and manifest.json into out_dir. */
IAT_API iat_status iat_run_command(const iat_config* cfg, const char* command, const char* out_dir);

#ifdef __cplusplus
}
#endif

#endif /* IAT_IAT_H */
