#include "analysis.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"
#include "text.hpp"

namespace pw {

namespace {

// Wave-curve slope at the anchor in the general form T_*(gamma-1)/(gamma*(p_*+pi));
// shock and rarefaction branches are tangent there, so one expression covers
// both theorem families.
double anchor_wave_slope(const StiffenedGasParams& vapor, double p_star, double T_star) {
  if (vapor.pi == 0.0) return admissible_initial_slope(vapor.gamma, p_star, T_star);
  return T_star * (vapor.gamma - 1.0) / (vapor.gamma * (p_star + vapor.pi));
}

TheoremSample make_sample(const StiffenedGasParams& vapor, const StiffenedGasParams& liquid,
                          double p_star, double T) {
  TheoremSample s;
  s.T = T;
  s.p_star = p_star;
  s.slope_wave = anchor_wave_slope(vapor, p_star, T);
  s.slope_sat = dTsat_dp(vapor, liquid, p_star, T);
  s.margin = s.slope_wave - s.slope_sat;
  s.excluded = T > kStrictnessTmax;
  s.sign1_ok = -liquid.C * (liquid.gamma - 1.0) / (p_star + liquid.pi) < 0.0;
  s.sign2_ok = -liquid.C * liquid.gamma + (vapor.q - liquid.q) / T > 0.0;
  return s;
}

TheoremReport finish_report(std::vector<TheoremSample> sweep) {
  TheoremReport rep;
  rep.sweep = std::move(sweep);
  rep.all_strict = true;
  rep.all_signs = true;
  rep.n_excluded = 0;
  bool any_included = false;
  double min_included = 0.0, min_all = 0.0;
  for (std::size_t i = 0; i < rep.sweep.size(); ++i) {
    const TheoremSample& s = rep.sweep[i];
    if (i == 0 || s.margin < min_all) min_all = s.margin;
    if (s.excluded) {
      ++rep.n_excluded;
      continue;
    }
    if (!any_included || s.margin < min_included) min_included = s.margin;
    any_included = true;
    if (!(s.margin > 1e-15 * std::fabs(s.slope_sat))) rep.all_strict = false;
    if (!s.sign1_ok || !s.sign2_ok) rep.all_signs = false;
  }
  rep.min_margin = any_included ? min_included : min_all;
  return rep;
}

}  // namespace

TheoremReport verify_condensation_table1(const StiffenedGasParams& vapor,
                                         const StiffenedGasParams& liquid, double T_min,
                                         double T_max, int n) {
  if (n < 1) fail(errc::invalid, "sweep needs n >= 1");
  if (n > 1 && !(T_min < T_max)) fail(errc::invalid, "need T_min < T_max");
  std::vector<TheoremSample> sweep;
  sweep.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double T =
        n == 1 ? T_min : T_min + (T_max - T_min) * static_cast<double>(i) / (n - 1);
    sweep.push_back(make_sample(vapor, liquid, p_sat(vapor, liquid, T), T));
  }
  return finish_report(std::move(sweep));
}

TheoremReport verify_condensation_fitted(const SteamTable& table, double T_min, double T_max,
                                         int n) {
  if (n < 1) fail(errc::invalid, "sweep needs n >= 1");
  if (n > 1 && !(T_min < T_max)) fail(errc::invalid, "need T_min < T_max");
  std::vector<TheoremSample> sweep;
  sweep.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double T =
        n == 1 ? T_min : T_min + (T_max - T_min) * static_cast<double>(i) / (n - 1);
    const SteamTableRow row = query_saturation(table, T);
    const LocalFit fit = fit_row(row);
    sweep.push_back(make_sample(fit.vapor, fit.liquid, row.p_sat, T));
  }
  return finish_report(std::move(sweep));
}

TraceResult trace_compression(const StiffenedGasParams& vapor,
                              const StiffenedGasParams& liquid, double p_hat, double T_hat,
                              double p_max) {
  if (!(p_hat > 0.0) || !(T_hat > 0.0)) fail(errc::domain, "anchor must be positive");
  if (!(p_max > p_hat)) fail(errc::invalid, "need p_max > p_hat");
  const SaturationOptions opt;
  const double T_on_line = T_sat(vapor, liquid, p_hat, opt);
  // tolerant strictness so anchors placed exactly on the line pass
  if (T_hat < T_on_line * (1.0 - 1e-9))
    fail(errc::region, "anchor T=" + fmt17(T_hat) + " K lies below the saturation line (T_sat=" +
                           fmt17(T_on_line) + " K): not a vapor state");

  // the saturation line ends at the critical pressure; the search stops there
  const double p_band_hi = p_sat(vapor, liquid, opt.t_hi, opt);
  const double hi = std::min(p_max, p_band_hi);
  if (!(hi > p_hat))
    fail(errc::range, "anchor pressure " + fmt17(p_hat) + " Pa is beyond the saturation band");

  TraceResult result;
  result.curve = sample_hugoniot(vapor, p_hat, T_hat, p_max, 512);

  double T_warm = T_on_line;
  auto T_curve = [&](double p) { return hugoniot_temperature(vapor, p_hat, T_hat, p); };
  auto T_saturation = [&](double p) {
    T_warm = T_sat_warm(vapor, liquid, p, T_warm, opt);
    return T_warm;
  };
  result.report = intersect_saturation_fn(T_curve, T_saturation, p_hat, hi);
  return result;
}

CavitationReport classify_cavitation(const StiffenedGasParams& vapor,
                                     const StiffenedGasParams& liquid, double p_hat,
                                     double T_hat, double p_min) {
  if (!(p_hat > 0.0) || !(T_hat > 0.0)) fail(errc::domain, "anchor must be positive");
  if (!(p_min < p_hat)) fail(errc::invalid, "need p_min < p_hat");
  if (!(p_min + liquid.pi > 0.0)) fail(errc::domain, "p_min + pi must stay positive");
  const SaturationOptions opt;
  const double p_on_line = p_sat(vapor, liquid, T_hat, opt);
  if (p_hat < p_on_line * (1.0 - 1e-9))
    fail(errc::region, "anchor p=" + fmt17(p_hat) + " Pa lies below the saturation line (p_sat=" +
                           fmt17(p_on_line) + " Pa): not a liquid state");

  CavitationReport rep;
  rep.p0 = p_hat;
  rep.T0 = T_hat;
  rep.kind = CavitationKind::none;
  rep.hit = false;
  rep.p_hit = rep.T_hit = 0.0;
  rep.mu_max = 0.0;

  const double p_band_lo = p_sat(vapor, liquid, opt.t_lo, opt);
  const double p_band_hi = p_sat(vapor, liquid, opt.t_hi, opt);
  const double lo = std::max(p_min, p_band_lo);
  const double hi = std::min(p_hat, p_band_hi);
  if (!(lo < hi)) return rep;  // expansion window misses the saturation band entirely

  double T_warm = T_hat;
  auto T_curve = [&](double p) { return isentrope_temperature_general(liquid, p_hat, T_hat, p); };
  auto T_saturation = [&](double p) {
    T_warm = T_sat_warm(vapor, liquid, p, T_warm, opt);
    return T_warm;
  };
  const IntersectionReport ir = intersect_saturation_fn(T_curve, T_saturation, lo, hi);
  if (!ir.found) return rep;

  rep.kind = CavitationKind::weak;
  rep.hit = true;
  rep.p_hit = ir.p;
  rep.T_hit = ir.T;

  // Entropy balance for the continuation into wet steam: the rarefaction
  // carries s0; a mixture at saturation temperature T with the same entropy
  // has vapor fraction mu = (s0 - s_L(T))/(s_V(T) - s_L(T)). At T_hit this is
  // zero and it grows as the expansion proceeds along the line.
  const double s0 = entropy(liquid, p_hat, T_hat);
  const double T_stop = T_sat_warm(vapor, liquid, lo, rep.T_hit, opt);
  const int steps = 256;
  for (int i = 0; i <= steps; ++i) {
    const double T = T_stop + (rep.T_hit - T_stop) * static_cast<double>(i) / steps;
    const double p = p_sat(vapor, liquid, T, opt);
    const double s_l = entropy(liquid, p, T);
    const double s_v = entropy(vapor, p, T);
    if (!(s_v > s_l)) continue;
    const double mu = std::clamp((s0 - s_l) / (s_v - s_l), 0.0, 1.0);
    rep.mu_max = std::max(rep.mu_max, mu);
  }
  return rep;
}

double strong_cavitation_contradiction(const LocalFit& fit, double p_star, double T_star) {
  return admissible_initial_slope(fit.vapor.gamma, p_star, T_star) -
         dTsat_dp(fit.vapor, fit.liquid, p_star, T_star);
}

double vapor_mass_fraction_bound(const SteamTable& table) {
  const std::vector<SteamTableRow>& rows = table.rows;
  if (rows.empty() || rows.front().T > 274.0 || rows.back().T < kStrictnessTmax)
    fail(errc::range, "table must span the triple point to the near-critical region");
  double best = 0.0;
  for (std::size_t j = 0; j < rows.size(); ++j) {      // T0: starting liquid state
    for (std::size_t i = 0; i <= j; ++i) {             // T <= T0: mixture temperature
      const double gap = rows[i].s_V - rows[i].s_L;
      if (!(gap > 0.0)) continue;
      const double mu = (rows[j].s_L - rows[i].s_L) / gap;
      if (mu >= 0.0 && mu <= 1.0 && mu > best) best = mu;
    }
  }
  return best;
}

double critical_entropy_estimate(const SteamTable& table) {
  if (table.rows.empty()) fail(errc::invalid, "table not loaded");
  const SteamTableRow& last = table.rows.back();
  return 0.5 * (last.s_V + last.s_L);
}

std::string to_csv(const TheoremReport& rep) {
  std::string out =
      "T_K,p_star_Pa,slope_wave_K_per_Pa,slope_sat_K_per_Pa,margin_K_per_Pa,excluded\n";
  for (const TheoremSample& s : rep.sweep)
    out += fmt17(s.T) + ',' + fmt17(s.p_star) + ',' + fmt17(s.slope_wave) + ',' +
           fmt17(s.slope_sat) + ',' + fmt17(s.margin) + ',' + (s.excluded ? "1" : "0") + '\n';
  return out;
}

std::string to_json(const TheoremReport& rep) {
  std::string out = std::string("{\"all_strict\":") + (rep.all_strict ? "true" : "false") +
                    ",\"all_sign_conditions\":" + (rep.all_signs ? "true" : "false") +
                    ",\"min_margin\":" + fmt17(rep.min_margin) +
                    ",\"n\":" + std::to_string(rep.sweep.size()) +
                    ",\"n_excluded\":" + std::to_string(rep.n_excluded) + ",\"samples\":[";
  for (std::size_t i = 0; i < rep.sweep.size(); ++i) {
    const TheoremSample& s = rep.sweep[i];
    if (i) out += ',';
    out += "{\"T\":" + fmt17(s.T) + ",\"p_star\":" + fmt17(s.p_star) +
           ",\"slope_wave\":" + fmt17(s.slope_wave) + ",\"slope_sat\":" + fmt17(s.slope_sat) +
           ",\"margin\":" + fmt17(s.margin) + ",\"excluded\":" + (s.excluded ? "true" : "false") +
           ",\"sign1_ok\":" + (s.sign1_ok ? "true" : "false") +
           ",\"sign2_ok\":" + (s.sign2_ok ? "true" : "false") + "}";
  }
  out += "]}\n";
  return out;
}

std::string to_csv(const CavitationReport& rep) {
  std::string out = "kind,p0_Pa,T0_K,p_hit_Pa,T_hit_K,mu_max\n";
  out += std::string(rep.kind == CavitationKind::weak ? "weak" : "none") + ',' + fmt17(rep.p0) +
         ',' + fmt17(rep.T0) + ',' + (rep.hit ? fmt17(rep.p_hit) : "") + ',' +
         (rep.hit ? fmt17(rep.T_hit) : "") + ',' + fmt17(rep.mu_max) + '\n';
  return out;
}

std::string to_json(const CavitationReport& rep) {
  std::string out = std::string("{\"kind\":\"") +
                    (rep.kind == CavitationKind::weak ? "weak" : "none") +
                    "\",\"p0\":" + fmt17(rep.p0) + ",\"T0\":" + fmt17(rep.T0) +
                    ",\"hit\":" + (rep.hit ? "true" : "false");
  if (rep.hit) out += ",\"p_hit\":" + fmt17(rep.p_hit) + ",\"T_hit\":" + fmt17(rep.T_hit);
  out += ",\"mu_max\":" + fmt17(rep.mu_max) + "}\n";
  return out;
}

}  // namespace pw
