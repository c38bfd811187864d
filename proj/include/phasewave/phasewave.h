/* phasewave: two-phase stiffened-gas thermodynamics, wave curves, an exact
 * Riemann solver, steam-table parameter fitting, and the impossibility
 * checks for condensation by compression and strong cavitation.
 *
 * Conventions:
 *   - SI units everywhere (Pa, K, kg/m3, J/kg, J/(kg K), m/s).
 *   - Every function returns a pw_status; results go through out-pointers.
 *   - On failure, pw_last_error() returns a thread-local message.
 *   - Strings returned through char** are owned by the caller; release them
 *     with pw_string_free(). Opaque handles have matching *_free functions.
 *   - All operations are pure; handles are immutable after creation and may
 *     be shared across threads.
 */

#ifndef PHASEWAVE_H
#define PHASEWAVE_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define PW_API __declspec(dllexport)
#elif defined(PW_BUILD)
#define PW_API __attribute__((visibility("default")))
#else
#define PW_API
#endif

typedef enum pw_status {
  PW_OK = 0,
  PW_ERR_DOMAIN = 1,      /* state outside the admissible region */
  PW_ERR_RANGE = 2,       /* query outside table/curve coverage */
  PW_ERR_BRACKET = 3,     /* no (or no unique) root bracket */
  PW_ERR_CONVERGENCE = 4, /* iteration budget exhausted */
  PW_ERR_PARSE = 5,       /* malformed input text */
  PW_ERR_REGION = 6,      /* state on the wrong side of the saturation line */
  PW_ERR_VACUUM = 7,      /* Riemann data generate vacuum */
  PW_ERR_DEGENERATE = 8,  /* vanishing denominator; refusing to guess */
  PW_ERR_INVALID = 9,     /* bad argument (null pointer, n too small, ...) */
  PW_ERR_INTERNAL = 10
} pw_status;

typedef struct pw_params pw_params;
typedef struct pw_sat_curve pw_sat_curve;
typedef struct pw_wave_curve pw_wave_curve;
typedef struct pw_steam_table pw_steam_table;
typedef struct pw_riemann pw_riemann;
typedef struct pw_theorem_report pw_theorem_report;

/* Stiffened-gas constants: p = (gamma-1)*C*rho*T - pi and friends. */
typedef struct pw_stiffened_gas {
  double gamma;   /* > 1 */
  double pi;      /* Pa */
  double C;       /* J/(kg K) */
  double q;       /* J/kg */
  double q_prime; /* J/(kg K) */
} pw_stiffened_gas;

typedef struct pw_phase_state {
  double p, rho, T, e, s, a, g;
} pw_phase_state;

typedef struct pw_sat_point {
  double T;        /* K */
  double p_sat;    /* Pa */
  double dT_dp;    /* K/Pa */
  pw_phase_state vapor, liquid;
  int near_critical; /* within 0.5 K of the critical temperature */
} pw_sat_point;

typedef struct pw_intersection {
  int found;
  double p, T;                /* crossing point, when found */
  double min_signed_distance; /* min of T_curve - T_sat over the sweep, K */
  double p_at_min;
  double slope_curve, slope_sat; /* K/Pa at the crossing or closest approach */
} pw_intersection;

typedef struct pw_riemann_star {
  double p_star, u_star;
  double rho_star_left, rho_star_right;
  double contact_speed;
  int left_is_shock, right_is_shock;
  double left_head, left_tail, right_head, right_tail;
  int iterations;
} pw_riemann_star;

typedef struct pw_table_row {
  double T, p_sat;
  double rho_V, rho_L;
  double a_V, a_L;
  double s_V, s_L;
  double e_V, e_L;
  double cp_L;
} pw_table_row;

typedef struct pw_local_fit {
  double T_anchor;
  pw_stiffened_gas vapor, liquid;
  int liquid_pi_nonpositive;
} pw_local_fit;

typedef struct pw_theorem_summary {
  int all_strict;          /* every non-excluded margin strictly positive */
  int all_sign_conditions; /* the two liquid-side sign conditions hold */
  double min_margin;       /* K/Pa */
  int n_samples;
  int n_excluded; /* near-critical samples reported but not asserted */
} pw_theorem_summary;

typedef struct pw_cavitation {
  double p0, T0;
  int kind; /* 0 = none, 1 = weak; strong does not occur */
  int hit;
  double p_hit, T_hit;
  double mu_max; /* vapor mass fraction bound, in [0, 1] */
} pw_cavitation;

/* ---- library ---------------------------------------------------------- */

PW_API const char* pw_version(void);

/* Thread-local message for the last failing call on this thread. */
PW_API const char* pw_last_error(void);

PW_API void pw_string_free(char* s);

/* ---- parameter sets ---------------------------------------------------- */

/* Presets: "table1-vapor", "table1-liquid". */
PW_API pw_status pw_params_preset(const char* name, pw_params** out);
PW_API pw_status pw_params_make(const pw_stiffened_gas* values, pw_params** out);
/* JSON object with keys gamma, pi, C, q, q_prime. */
PW_API pw_status pw_params_from_json(const char* text, pw_params** out);
/* JSON document {"vapor": {...}, "liquid": {...}}. */
PW_API pw_status pw_params_pair_from_json(const char* text, pw_params** vapor,
                                          pw_params** liquid);
PW_API pw_status pw_params_get(const pw_params* p, pw_stiffened_gas* out);
PW_API pw_status pw_params_to_json(const pw_params* p, char** out);
PW_API void pw_params_free(pw_params* p);

/* ---- single-phase EOS --------------------------------------------------- */

PW_API pw_status pw_eos_energy(const pw_params* g, double p, double rho, double* out);
PW_API pw_status pw_eos_temperature(const pw_params* g, double p, double rho, double* out);
PW_API pw_status pw_eos_density_from_pT(const pw_params* g, double p, double T, double* out);
PW_API pw_status pw_eos_sound_speed(const pw_params* g, double p, double rho, double* out);
PW_API pw_status pw_eos_entropy(const pw_params* g, double p, double T, double* out);
PW_API pw_status pw_eos_gibbs(const pw_params* g, double p, double T, double* out);
PW_API pw_status pw_eos_state_from_pT(const pw_params* g, double p, double T,
                                      pw_phase_state* out);
/* Absolute central-difference residuals of dg/dp-1/rho and dg/dT+s. */
PW_API pw_status pw_eos_check_consistency(const pw_params* g, double p, double T, double h,
                                          double* res_p, double* res_T);

/* ---- saturation --------------------------------------------------------- */

PW_API pw_status pw_saturation_p_sat(const pw_params* vapor, const pw_params* liquid, double T,
                                     double* out);
PW_API pw_status pw_saturation_T_sat(const pw_params* vapor, const pw_params* liquid, double p,
                                     double* out);
PW_API pw_status pw_saturation_slope(const pw_params* vapor, const pw_params* liquid, double p,
                                     double T, double* out);
PW_API pw_status pw_saturation_point(const pw_params* vapor, const pw_params* liquid, double T,
                                     pw_sat_point* out);
PW_API pw_status pw_satcurve(const pw_params* vapor, const pw_params* liquid, double T_min,
                             double T_max, int n, pw_sat_curve** out);
PW_API pw_status pw_satcurve_size(const pw_sat_curve* c, int* out);
PW_API pw_status pw_satcurve_point(const pw_sat_curve* c, int i, pw_sat_point* out);
PW_API pw_status pw_satcurve_csv(const pw_sat_curve* c, char** out);
PW_API pw_status pw_satcurve_json(const pw_sat_curve* c, char** out);
PW_API void pw_satcurve_free(pw_sat_curve* c);

/* ---- wave curves -------------------------------------------------------- */

PW_API pw_status pw_hugoniot_density_ratio(const pw_params* g, double p_hat, double p_star,
                                           double* out);
PW_API pw_status pw_hugoniot_temperature(const pw_params* g, double p_hat, double T_hat,
                                         double p_star, double* out);
PW_API pw_status pw_admissible_initial_curve(double gamma_v, double p_star, double T_star,
                                             double p_hat, double* out);
PW_API pw_status pw_admissible_initial_slope(double gamma_v, double p_star, double T_star,
                                             double* out);
PW_API pw_status pw_isentrope_temperature(double gamma_v, double p_star, double T_star, double p,
                                          double* out);
/* Shock branch sampled on [p_hat, p_end]; rarefaction on [p_end, p_hat]. */
PW_API pw_status pw_wavecurve_shock(const pw_params* g, double p_hat, double T_hat, double p_end,
                                    int n, pw_wave_curve** out);
PW_API pw_status pw_wavecurve_rarefaction(const pw_params* g, double p_hat, double T_hat,
                                          double p_end, int n, pw_wave_curve** out);
PW_API pw_status pw_wavecurve_size(const pw_wave_curve* c, int* out);
PW_API pw_status pw_wavecurve_sample(const pw_wave_curve* c, int i, double* p, double* T,
                                     double* rho);
PW_API pw_status pw_wavecurve_csv(const pw_wave_curve* c, char** out);
PW_API pw_status pw_wavecurve_json(const pw_wave_curve* c, char** out);
PW_API pw_status pw_intersect_saturation(const pw_wave_curve* curve, const pw_sat_curve* sat,
                                         pw_intersection* out);
PW_API pw_status pw_intersection_json(const pw_intersection* r, char** out);
PW_API void pw_wavecurve_free(pw_wave_curve* c);

/* ---- Riemann solver ------------------------------------------------------ */

PW_API pw_status pw_riemann_solve(const pw_params* g, double rho_l, double u_l, double p_l,
                                  double rho_r, double u_r, double p_r, pw_riemann** out);
PW_API pw_status pw_riemann_get_star(const pw_riemann* r, pw_riemann_star* out);
PW_API pw_status pw_riemann_sample(const pw_riemann* r, double xi, double* rho, double* u,
                                   double* p, double* T);
/* Largest relative Rankine-Hugoniot flux residual over all shocks (0 if none). */
PW_API pw_status pw_riemann_rh_residual(const pw_riemann* r, double* out);
PW_API pw_status pw_riemann_json(const pw_riemann* r, char** out);
PW_API pw_status pw_riemann_profile_csv(const pw_riemann* r, double xi_min, double xi_max, int n,
                                        char** out);
PW_API void pw_riemann_free(pw_riemann* r);

/* ---- steam table and local fits ------------------------------------------ */

PW_API pw_status pw_table_load_file(const char* path, pw_steam_table** out);
PW_API pw_status pw_table_load_text(const char* csv, pw_steam_table** out);
PW_API pw_status pw_table_rows(const pw_steam_table* t, int* out);
PW_API pw_status pw_table_get_row(const pw_steam_table* t, int i, pw_table_row* out);
PW_API pw_status pw_table_query(const pw_steam_table* t, double T, pw_table_row* out);
PW_API pw_status pw_fit_vapor(const pw_table_row* row, pw_stiffened_gas* out);
PW_API pw_status pw_fit_liquid(const pw_table_row* row, pw_stiffened_gas* out,
                               int* pi_nonpositive);
PW_API pw_status pw_fit_at(const pw_steam_table* t, double T, pw_local_fit* out);
PW_API pw_status pw_fit_curve_csv(const pw_steam_table* t, double T_min, double T_max, int n,
                                  char** out);
PW_API pw_status pw_fit_curve_json(const pw_steam_table* t, double T_min, double T_max, int n,
                                   char** out);
PW_API void pw_table_free(pw_steam_table* t);

/* ---- theorem harness ------------------------------------------------------ */

PW_API pw_status pw_verify_condensation_table1(const pw_params* vapor, const pw_params* liquid,
                                               double T_min, double T_max, int n,
                                               pw_theorem_report** out);
PW_API pw_status pw_verify_condensation_fitted(const pw_steam_table* t, double T_min,
                                               double T_max, int n, pw_theorem_report** out);
PW_API pw_status pw_report_summary(const pw_theorem_report* r, pw_theorem_summary* out);
PW_API pw_status pw_report_csv(const pw_theorem_report* r, char** out);
PW_API pw_status pw_report_json(const pw_theorem_report* r, char** out);
PW_API void pw_report_free(pw_theorem_report* r);

/* Compression Hugoniot from a vapor anchor intersected with the saturation
 * line; curve_out may be NULL when only the report is wanted. */
PW_API pw_status pw_trace_compression(const pw_params* vapor, const pw_params* liquid,
                                      double p_hat, double T_hat, double p_max,
                                      pw_wave_curve** curve_out, pw_intersection* report);
PW_API pw_status pw_classify_cavitation(const pw_params* vapor, const pw_params* liquid,
                                        double p_hat, double T_hat, double p_min,
                                        pw_cavitation* out);
PW_API pw_status pw_cavitation_json(const pw_cavitation* r, char** out);
PW_API pw_status pw_cavitation_csv(const pw_cavitation* r, char** out);
PW_API pw_status pw_strong_cavitation_margin(const pw_local_fit* fit, double p_star,
                                             double T_star, double* out);
PW_API pw_status pw_mass_fraction_bound(const pw_steam_table* t, double* out);
PW_API pw_status pw_critical_entropy(const pw_steam_table* t, double* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PHASEWAVE_H */
