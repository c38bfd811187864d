#include "phasewave/phasewave.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "analysis.hpp"
#include "error.hpp"
#include "riemann.hpp"

struct pw_params {
  pw::StiffenedGasParams v;
};
struct pw_sat_curve {
  pw::SaturationCurve c;
};
struct pw_wave_curve {
  pw::WaveCurve c;
};
struct pw_steam_table {
  pw::SteamTable t;
};
struct pw_riemann {
  pw::RiemannInput in;
  pw::RiemannSolution sol;
};
struct pw_theorem_report {
  pw::TheoremReport r;
};

namespace {

thread_local std::string t_last_error;

template <class F>
pw_status guarded(F&& fn) {
  try {
    fn();
    return PW_OK;
  } catch (const pw::Error& e) {
    t_last_error = e.what();
    return static_cast<pw_status>(static_cast<int>(e.code()));
  } catch (const std::bad_alloc&) {
    t_last_error = "out of memory";
    return PW_ERR_INTERNAL;
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return PW_ERR_INTERNAL;
  }
}

pw_status invalid(const char* what) {
  t_last_error = what;
  return PW_ERR_INVALID;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) pw::fail(pw::errc::internal, "out of memory");
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

pw_stiffened_gas to_c(const pw::StiffenedGasParams& g) {
  return {g.gamma, g.pi, g.C, g.q, g.q_prime};
}

pw::StiffenedGasParams from_c(const pw_stiffened_gas& g) {
  return {g.gamma, g.pi, g.C, g.q, g.q_prime};
}

pw_phase_state to_c(const pw::PhaseState& st) {
  return {st.p, st.rho, st.T, st.e, st.s, st.a, st.g};
}

pw_sat_point to_c(const pw::SaturationPoint& pt) {
  pw_sat_point out;
  out.T = pt.T;
  out.p_sat = pt.p_sat;
  out.dT_dp = pt.dT_dp;
  out.vapor = to_c(pt.vapor);
  out.liquid = to_c(pt.liquid);
  out.near_critical = pt.near_critical ? 1 : 0;
  return out;
}

pw_intersection to_c(const pw::IntersectionReport& r) {
  pw_intersection out;
  out.found = r.found ? 1 : 0;
  out.p = r.p;
  out.T = r.T;
  out.min_signed_distance = r.min_signed_distance;
  out.p_at_min = r.p_at_min;
  out.slope_curve = r.slope_curve;
  out.slope_sat = r.slope_sat;
  return out;
}

pw::IntersectionReport from_c(const pw_intersection& r) {
  pw::IntersectionReport out;
  out.found = r.found != 0;
  out.p = r.p;
  out.T = r.T;
  out.min_signed_distance = r.min_signed_distance;
  out.p_at_min = r.p_at_min;
  out.slope_curve = r.slope_curve;
  out.slope_sat = r.slope_sat;
  return out;
}

pw_table_row to_c(const pw::SteamTableRow& r) {
  return {r.T, r.p_sat, r.rho_V, r.rho_L, r.a_V, r.a_L, r.s_V, r.s_L, r.e_V, r.e_L, r.cp_L};
}

pw::SteamTableRow from_c(const pw_table_row& r) {
  return {r.T, r.p_sat, r.rho_V, r.rho_L, r.a_V, r.a_L, r.s_V, r.s_L, r.e_V, r.e_L, r.cp_L};
}

pw_cavitation to_c(const pw::CavitationReport& r) {
  pw_cavitation out;
  out.p0 = r.p0;
  out.T0 = r.T0;
  out.kind = r.kind == pw::CavitationKind::weak ? 1 : 0;
  out.hit = r.hit ? 1 : 0;
  out.p_hit = r.p_hit;
  out.T_hit = r.T_hit;
  out.mu_max = r.mu_max;
  return out;
}

pw::CavitationReport from_c(const pw_cavitation& r) {
  pw::CavitationReport out;
  out.p0 = r.p0;
  out.T0 = r.T0;
  out.kind = r.kind ? pw::CavitationKind::weak : pw::CavitationKind::none;
  out.hit = r.hit != 0;
  out.p_hit = r.p_hit;
  out.T_hit = r.T_hit;
  out.mu_max = r.mu_max;
  return out;
}

}  // namespace

extern "C" {

const char* pw_version(void) { return "1.0.0"; }

const char* pw_last_error(void) { return t_last_error.c_str(); }

void pw_string_free(char* s) { std::free(s); }

/* ---- parameter sets ---------------------------------------------------- */

pw_status pw_params_preset(const char* name, pw_params** out) {
  if (!name || !out) return invalid("pw_params_preset: null argument");
  return guarded([&] { *out = new pw_params{pw::preset(name)}; });
}

pw_status pw_params_make(const pw_stiffened_gas* values, pw_params** out) {
  if (!values || !out) return invalid("pw_params_make: null argument");
  return guarded([&] {
    pw::StiffenedGasParams g = from_c(*values);
    pw::validate(g);
    *out = new pw_params{g};
  });
}

pw_status pw_params_from_json(const char* text, pw_params** out) {
  if (!text || !out) return invalid("pw_params_from_json: null argument");
  return guarded([&] { *out = new pw_params{pw::params_from_json(text)}; });
}

pw_status pw_params_pair_from_json(const char* text, pw_params** vapor, pw_params** liquid) {
  if (!text || !vapor || !liquid) return invalid("pw_params_pair_from_json: null argument");
  return guarded([&] {
    pw::ParamsPair pair = pw::params_pair_from_json(text);
    *vapor = new pw_params{pair.vapor};
    *liquid = new pw_params{pair.liquid};
  });
}

pw_status pw_params_get(const pw_params* p, pw_stiffened_gas* out) {
  if (!p || !out) return invalid("pw_params_get: null argument");
  *out = to_c(p->v);
  return PW_OK;
}

pw_status pw_params_to_json(const pw_params* p, char** out) {
  if (!p || !out) return invalid("pw_params_to_json: null argument");
  return guarded([&] { *out = dup_string(pw::params_to_json(p->v)); });
}

void pw_params_free(pw_params* p) { delete p; }

/* ---- single-phase EOS --------------------------------------------------- */

pw_status pw_eos_energy(const pw_params* g, double p, double rho, double* out) {
  if (!g || !out) return invalid("pw_eos_energy: null argument");
  return guarded([&] { *out = pw::energy(g->v, p, rho); });
}

pw_status pw_eos_temperature(const pw_params* g, double p, double rho, double* out) {
  if (!g || !out) return invalid("pw_eos_temperature: null argument");
  return guarded([&] { *out = pw::temperature(g->v, p, rho); });
}

pw_status pw_eos_density_from_pT(const pw_params* g, double p, double T, double* out) {
  if (!g || !out) return invalid("pw_eos_density_from_pT: null argument");
  return guarded([&] { *out = pw::density_from_pT(g->v, p, T); });
}

pw_status pw_eos_sound_speed(const pw_params* g, double p, double rho, double* out) {
  if (!g || !out) return invalid("pw_eos_sound_speed: null argument");
  return guarded([&] { *out = pw::sound_speed(g->v, p, rho); });
}

pw_status pw_eos_entropy(const pw_params* g, double p, double T, double* out) {
  if (!g || !out) return invalid("pw_eos_entropy: null argument");
  return guarded([&] { *out = pw::entropy(g->v, p, T); });
}

pw_status pw_eos_gibbs(const pw_params* g, double p, double T, double* out) {
  if (!g || !out) return invalid("pw_eos_gibbs: null argument");
  return guarded([&] { *out = pw::gibbs(g->v, p, T); });
}

pw_status pw_eos_state_from_pT(const pw_params* g, double p, double T, pw_phase_state* out) {
  if (!g || !out) return invalid("pw_eos_state_from_pT: null argument");
  return guarded([&] { *out = to_c(pw::state_from_pT(g->v, p, T)); });
}

pw_status pw_eos_check_consistency(const pw_params* g, double p, double T, double h,
                                   double* res_p, double* res_T) {
  if (!g || !res_p || !res_T) return invalid("pw_eos_check_consistency: null argument");
  return guarded([&] {
    pw::ConsistencyResidual r = pw::check_consistency(g->v, p, T, h);
    *res_p = r.dgdp_minus_v;
    *res_T = r.dgdT_plus_s;
  });
}

/* ---- saturation --------------------------------------------------------- */

pw_status pw_saturation_p_sat(const pw_params* vapor, const pw_params* liquid, double T,
                              double* out) {
  if (!vapor || !liquid || !out) return invalid("pw_saturation_p_sat: null argument");
  return guarded([&] { *out = pw::p_sat(vapor->v, liquid->v, T); });
}

pw_status pw_saturation_T_sat(const pw_params* vapor, const pw_params* liquid, double p,
                              double* out) {
  if (!vapor || !liquid || !out) return invalid("pw_saturation_T_sat: null argument");
  return guarded([&] { *out = pw::T_sat(vapor->v, liquid->v, p); });
}

pw_status pw_saturation_slope(const pw_params* vapor, const pw_params* liquid, double p,
                              double T, double* out) {
  if (!vapor || !liquid || !out) return invalid("pw_saturation_slope: null argument");
  return guarded([&] { *out = pw::dTsat_dp(vapor->v, liquid->v, p, T); });
}

pw_status pw_saturation_point(const pw_params* vapor, const pw_params* liquid, double T,
                              pw_sat_point* out) {
  if (!vapor || !liquid || !out) return invalid("pw_saturation_point: null argument");
  return guarded([&] { *out = to_c(pw::saturation_point(vapor->v, liquid->v, T)); });
}

pw_status pw_satcurve(const pw_params* vapor, const pw_params* liquid, double T_min,
                      double T_max, int n, pw_sat_curve** out) {
  if (!vapor || !liquid || !out) return invalid("pw_satcurve: null argument");
  return guarded(
      [&] { *out = new pw_sat_curve{pw::saturation_curve(vapor->v, liquid->v, T_min, T_max, n)}; });
}

pw_status pw_satcurve_size(const pw_sat_curve* c, int* out) {
  if (!c || !out) return invalid("pw_satcurve_size: null argument");
  *out = static_cast<int>(c->c.points.size());
  return PW_OK;
}

pw_status pw_satcurve_point(const pw_sat_curve* c, int i, pw_sat_point* out) {
  if (!c || !out) return invalid("pw_satcurve_point: null argument");
  if (i < 0 || i >= static_cast<int>(c->c.points.size()))
    return invalid("pw_satcurve_point: index out of range");
  *out = to_c(c->c.points[static_cast<std::size_t>(i)]);
  return PW_OK;
}

pw_status pw_satcurve_csv(const pw_sat_curve* c, char** out) {
  if (!c || !out) return invalid("pw_satcurve_csv: null argument");
  return guarded([&] { *out = dup_string(pw::to_csv(c->c)); });
}

pw_status pw_satcurve_json(const pw_sat_curve* c, char** out) {
  if (!c || !out) return invalid("pw_satcurve_json: null argument");
  return guarded([&] { *out = dup_string(pw::to_json(c->c)); });
}

void pw_satcurve_free(pw_sat_curve* c) { delete c; }

/* ---- wave curves -------------------------------------------------------- */

pw_status pw_hugoniot_density_ratio(const pw_params* g, double p_hat, double p_star,
                                    double* out) {
  if (!g || !out) return invalid("pw_hugoniot_density_ratio: null argument");
  return guarded([&] { *out = pw::hugoniot_density_ratio(g->v, p_hat, p_star); });
}

pw_status pw_hugoniot_temperature(const pw_params* g, double p_hat, double T_hat, double p_star,
                                  double* out) {
  if (!g || !out) return invalid("pw_hugoniot_temperature: null argument");
  return guarded([&] { *out = pw::hugoniot_temperature(g->v, p_hat, T_hat, p_star); });
}

pw_status pw_admissible_initial_curve(double gamma_v, double p_star, double T_star, double p_hat,
                                      double* out) {
  if (!out) return invalid("pw_admissible_initial_curve: null argument");
  return guarded([&] { *out = pw::admissible_initial_curve(gamma_v, p_star, T_star, p_hat); });
}

pw_status pw_admissible_initial_slope(double gamma_v, double p_star, double T_star,
                                      double* out) {
  if (!out) return invalid("pw_admissible_initial_slope: null argument");
  return guarded([&] { *out = pw::admissible_initial_slope(gamma_v, p_star, T_star); });
}

pw_status pw_isentrope_temperature(double gamma_v, double p_star, double T_star, double p,
                                   double* out) {
  if (!out) return invalid("pw_isentrope_temperature: null argument");
  return guarded([&] { *out = pw::isentrope_temperature(gamma_v, p_star, T_star, p); });
}

pw_status pw_wavecurve_shock(const pw_params* g, double p_hat, double T_hat, double p_end, int n,
                             pw_wave_curve** out) {
  if (!g || !out) return invalid("pw_wavecurve_shock: null argument");
  return guarded(
      [&] { *out = new pw_wave_curve{pw::sample_hugoniot(g->v, p_hat, T_hat, p_end, n)}; });
}

pw_status pw_wavecurve_rarefaction(const pw_params* g, double p_hat, double T_hat, double p_end,
                                   int n, pw_wave_curve** out) {
  if (!g || !out) return invalid("pw_wavecurve_rarefaction: null argument");
  return guarded(
      [&] { *out = new pw_wave_curve{pw::sample_rarefaction(g->v, p_hat, T_hat, p_end, n)}; });
}

pw_status pw_wavecurve_size(const pw_wave_curve* c, int* out) {
  if (!c || !out) return invalid("pw_wavecurve_size: null argument");
  *out = static_cast<int>(c->c.samples.size());
  return PW_OK;
}

pw_status pw_wavecurve_sample(const pw_wave_curve* c, int i, double* p, double* T, double* rho) {
  if (!c || !p || !T || !rho) return invalid("pw_wavecurve_sample: null argument");
  if (i < 0 || i >= static_cast<int>(c->c.samples.size()))
    return invalid("pw_wavecurve_sample: index out of range");
  const pw::WaveCurve::Sample& s = c->c.samples[static_cast<std::size_t>(i)];
  *p = s.p;
  *T = s.T;
  *rho = s.rho;
  return PW_OK;
}

pw_status pw_wavecurve_csv(const pw_wave_curve* c, char** out) {
  if (!c || !out) return invalid("pw_wavecurve_csv: null argument");
  return guarded([&] { *out = dup_string(pw::to_csv(c->c)); });
}

pw_status pw_wavecurve_json(const pw_wave_curve* c, char** out) {
  if (!c || !out) return invalid("pw_wavecurve_json: null argument");
  return guarded([&] { *out = dup_string(pw::to_json(c->c)); });
}

pw_status pw_intersect_saturation(const pw_wave_curve* curve, const pw_sat_curve* sat,
                                  pw_intersection* out) {
  if (!curve || !sat || !out) return invalid("pw_intersect_saturation: null argument");
  return guarded([&] { *out = to_c(pw::intersect_saturation(curve->c, sat->c)); });
}

pw_status pw_intersection_json(const pw_intersection* r, char** out) {
  if (!r || !out) return invalid("pw_intersection_json: null argument");
  return guarded([&] { *out = dup_string(pw::to_json(from_c(*r))); });
}

void pw_wavecurve_free(pw_wave_curve* c) { delete c; }

/* ---- Riemann solver ------------------------------------------------------ */

pw_status pw_riemann_solve(const pw_params* g, double rho_l, double u_l, double p_l,
                           double rho_r, double u_r, double p_r, pw_riemann** out) {
  if (!g || !out) return invalid("pw_riemann_solve: null argument");
  return guarded([&] {
    pw::RiemannInput in{rho_l, u_l, p_l, rho_r, u_r, p_r, g->v};
    pw::RiemannSolution sol = pw::solve(in);
    *out = new pw_riemann{in, sol};
  });
}

pw_status pw_riemann_get_star(const pw_riemann* r, pw_riemann_star* out) {
  if (!r || !out) return invalid("pw_riemann_get_star: null argument");
  out->p_star = r->sol.p_star;
  out->u_star = r->sol.u_star;
  out->rho_star_left = r->sol.rho_star_l;
  out->rho_star_right = r->sol.rho_star_r;
  out->contact_speed = r->sol.contact_speed;
  out->left_is_shock = r->sol.left.kind == pw::WaveKind::shock ? 1 : 0;
  out->right_is_shock = r->sol.right.kind == pw::WaveKind::shock ? 1 : 0;
  out->left_head = r->sol.left.head;
  out->left_tail = r->sol.left.tail;
  out->right_head = r->sol.right.head;
  out->right_tail = r->sol.right.tail;
  out->iterations = r->sol.iterations;
  return PW_OK;
}

pw_status pw_riemann_sample(const pw_riemann* r, double xi, double* rho, double* u, double* p,
                            double* T) {
  if (!r || !rho || !u || !p || !T) return invalid("pw_riemann_sample: null argument");
  return guarded([&] {
    pw::SampledState st = pw::sample(r->sol, r->in, xi);
    *rho = st.rho;
    *u = st.u;
    *p = st.p;
    *T = pw::temperature(r->in.params, st.p, st.rho);
  });
}

pw_status pw_riemann_rh_residual(const pw_riemann* r, double* out) {
  if (!r || !out) return invalid("pw_riemann_rh_residual: null argument");
  return guarded([&] {
    double worst = 0.0;
    for (const pw::ShockResidual& s : pw::verify_rankine_hugoniot(r->sol, r->in))
      worst = std::max({worst, s.mass, s.momentum, s.energy});
    *out = worst;
  });
}

pw_status pw_riemann_json(const pw_riemann* r, char** out) {
  if (!r || !out) return invalid("pw_riemann_json: null argument");
  return guarded([&] { *out = dup_string(pw::to_json(r->sol)); });
}

pw_status pw_riemann_profile_csv(const pw_riemann* r, double xi_min, double xi_max, int n,
                                 char** out) {
  if (!r || !out) return invalid("pw_riemann_profile_csv: null argument");
  return guarded([&] { *out = dup_string(pw::profile_csv(r->sol, r->in, xi_min, xi_max, n)); });
}

void pw_riemann_free(pw_riemann* r) { delete r; }

/* ---- steam table and local fits ------------------------------------------ */

pw_status pw_table_load_file(const char* path, pw_steam_table** out) {
  if (!path || !out) return invalid("pw_table_load_file: null argument");
  return guarded([&] { *out = new pw_steam_table{pw::load_table_file(path)}; });
}

pw_status pw_table_load_text(const char* csv, pw_steam_table** out) {
  if (!csv || !out) return invalid("pw_table_load_text: null argument");
  return guarded([&] { *out = new pw_steam_table{pw::load_table_text(csv)}; });
}

pw_status pw_table_rows(const pw_steam_table* t, int* out) {
  if (!t || !out) return invalid("pw_table_rows: null argument");
  *out = static_cast<int>(t->t.rows.size());
  return PW_OK;
}

pw_status pw_table_get_row(const pw_steam_table* t, int i, pw_table_row* out) {
  if (!t || !out) return invalid("pw_table_get_row: null argument");
  if (i < 0 || i >= static_cast<int>(t->t.rows.size()))
    return invalid("pw_table_get_row: index out of range");
  *out = to_c(t->t.rows[static_cast<std::size_t>(i)]);
  return PW_OK;
}

pw_status pw_table_query(const pw_steam_table* t, double T, pw_table_row* out) {
  if (!t || !out) return invalid("pw_table_query: null argument");
  return guarded([&] { *out = to_c(pw::query_saturation(t->t, T)); });
}

pw_status pw_fit_vapor(const pw_table_row* row, pw_stiffened_gas* out) {
  if (!row || !out) return invalid("pw_fit_vapor: null argument");
  return guarded([&] { *out = to_c(pw::fit_vapor_params(from_c(*row))); });
}

pw_status pw_fit_liquid(const pw_table_row* row, pw_stiffened_gas* out, int* pi_nonpositive) {
  if (!row || !out) return invalid("pw_fit_liquid: null argument");
  return guarded([&] {
    bool flag = false;
    *out = to_c(pw::fit_liquid_params(from_c(*row), &flag));
    if (pi_nonpositive) *pi_nonpositive = flag ? 1 : 0;
  });
}

pw_status pw_fit_at(const pw_steam_table* t, double T, pw_local_fit* out) {
  if (!t || !out) return invalid("pw_fit_at: null argument");
  return guarded([&] {
    pw::LocalFit fit = pw::fit_at(t->t, T);
    out->T_anchor = fit.T_anchor;
    out->vapor = to_c(fit.vapor);
    out->liquid = to_c(fit.liquid);
    out->liquid_pi_nonpositive = fit.liquid_pi_nonpositive ? 1 : 0;
  });
}

pw_status pw_fit_curve_csv(const pw_steam_table* t, double T_min, double T_max, int n,
                           char** out) {
  if (!t || !out) return invalid("pw_fit_curve_csv: null argument");
  return guarded([&] { *out = dup_string(pw::fits_to_csv(pw::fit_curve(t->t, T_min, T_max, n))); });
}

pw_status pw_fit_curve_json(const pw_steam_table* t, double T_min, double T_max, int n,
                            char** out) {
  if (!t || !out) return invalid("pw_fit_curve_json: null argument");
  return guarded(
      [&] { *out = dup_string(pw::fits_to_json(pw::fit_curve(t->t, T_min, T_max, n))); });
}

void pw_table_free(pw_steam_table* t) { delete t; }

/* ---- theorem harness ------------------------------------------------------ */

pw_status pw_verify_condensation_table1(const pw_params* vapor, const pw_params* liquid,
                                        double T_min, double T_max, int n,
                                        pw_theorem_report** out) {
  if (!vapor || !liquid || !out) return invalid("pw_verify_condensation_table1: null argument");
  return guarded([&] {
    *out = new pw_theorem_report{
        pw::verify_condensation_table1(vapor->v, liquid->v, T_min, T_max, n)};
  });
}

pw_status pw_verify_condensation_fitted(const pw_steam_table* t, double T_min, double T_max,
                                        int n, pw_theorem_report** out) {
  if (!t || !out) return invalid("pw_verify_condensation_fitted: null argument");
  return guarded(
      [&] { *out = new pw_theorem_report{pw::verify_condensation_fitted(t->t, T_min, T_max, n)}; });
}

pw_status pw_report_summary(const pw_theorem_report* r, pw_theorem_summary* out) {
  if (!r || !out) return invalid("pw_report_summary: null argument");
  out->all_strict = r->r.all_strict ? 1 : 0;
  out->all_sign_conditions = r->r.all_signs ? 1 : 0;
  out->min_margin = r->r.min_margin;
  out->n_samples = static_cast<int>(r->r.sweep.size());
  out->n_excluded = r->r.n_excluded;
  return PW_OK;
}

pw_status pw_report_csv(const pw_theorem_report* r, char** out) {
  if (!r || !out) return invalid("pw_report_csv: null argument");
  return guarded([&] { *out = dup_string(pw::to_csv(r->r)); });
}

pw_status pw_report_json(const pw_theorem_report* r, char** out) {
  if (!r || !out) return invalid("pw_report_json: null argument");
  return guarded([&] { *out = dup_string(pw::to_json(r->r)); });
}

void pw_report_free(pw_theorem_report* r) { delete r; }

pw_status pw_trace_compression(const pw_params* vapor, const pw_params* liquid, double p_hat,
                               double T_hat, double p_max, pw_wave_curve** curve_out,
                               pw_intersection* report) {
  if (!vapor || !liquid || !report) return invalid("pw_trace_compression: null argument");
  return guarded([&] {
    pw::TraceResult res = pw::trace_compression(vapor->v, liquid->v, p_hat, T_hat, p_max);
    *report = to_c(res.report);
    if (curve_out) *curve_out = new pw_wave_curve{std::move(res.curve)};
  });
}

pw_status pw_classify_cavitation(const pw_params* vapor, const pw_params* liquid, double p_hat,
                                 double T_hat, double p_min, pw_cavitation* out) {
  if (!vapor || !liquid || !out) return invalid("pw_classify_cavitation: null argument");
  return guarded(
      [&] { *out = to_c(pw::classify_cavitation(vapor->v, liquid->v, p_hat, T_hat, p_min)); });
}

pw_status pw_cavitation_json(const pw_cavitation* r, char** out) {
  if (!r || !out) return invalid("pw_cavitation_json: null argument");
  return guarded([&] { *out = dup_string(pw::to_json(from_c(*r))); });
}

pw_status pw_cavitation_csv(const pw_cavitation* r, char** out) {
  if (!r || !out) return invalid("pw_cavitation_csv: null argument");
  return guarded([&] { *out = dup_string(pw::to_csv(from_c(*r))); });
}

pw_status pw_strong_cavitation_margin(const pw_local_fit* fit, double p_star, double T_star,
                                      double* out) {
  if (!fit || !out) return invalid("pw_strong_cavitation_margin: null argument");
  return guarded([&] {
    pw::LocalFit f{fit->T_anchor, from_c(fit->vapor), from_c(fit->liquid),
                   fit->liquid_pi_nonpositive != 0};
    *out = pw::strong_cavitation_contradiction(f, p_star, T_star);
  });
}

pw_status pw_mass_fraction_bound(const pw_steam_table* t, double* out) {
  if (!t || !out) return invalid("pw_mass_fraction_bound: null argument");
  return guarded([&] { *out = pw::vapor_mass_fraction_bound(t->t); });
}

pw_status pw_critical_entropy(const pw_steam_table* t, double* out) {
  if (!t || !out) return invalid("pw_critical_entropy: null argument");
  return guarded([&] { *out = pw::critical_entropy_estimate(t->t); });
}

} /* extern "C" */
