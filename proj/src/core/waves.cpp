#include "waves.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"
#include "text.hpp"

namespace pw {

namespace {

void require_positive(double x, const char* name) {
  if (!(x > 0.0)) fail(errc::domain, std::string(name) + " must be positive, got " + fmt17(x));
}

}  // namespace

double hugoniot_density_ratio(const StiffenedGasParams& g, double p_hat, double p_star) {
  const double P_hat = p_hat + g.pi;
  const double P_star = p_star + g.pi;
  require_positive(P_hat, "p_hat + pi");
  require_positive(P_star, "p_star + pi");
  const double gp = g.gamma + 1.0;
  const double gm = g.gamma - 1.0;
  const double denominator = gp * P_hat + gm * P_star;
  require_positive(denominator, "Hugoniot denominator");
  return (gp * P_star + gm * P_hat) / denominator;
}

double hugoniot_temperature(const StiffenedGasParams& g, double p_hat, double T_hat,
                            double p_star) {
  require_positive(T_hat, "T_hat");
  // T = (p+pi)/(C rho (gamma-1)), so T_*/T_hat = (P_*/P_hat)/(rho_*/rho_hat).
  return T_hat * (p_star + g.pi) / (p_hat + g.pi) / hugoniot_density_ratio(g, p_hat, p_star);
}

double admissible_initial_curve(double gamma_v, double p_star, double T_star, double p_hat) {
  require_positive(p_star, "p_star");
  require_positive(T_star, "T_star");
  require_positive(p_hat, "p_hat");
  if (!(gamma_v > 1.0)) fail(errc::domain, "gamma must exceed 1");
  const double gp = gamma_v + 1.0;
  const double gm = gamma_v - 1.0;
  return T_star * (p_hat / p_star) * (p_star * gp + p_hat * gm) / (p_hat * gp + p_star * gm);
}

double admissible_initial_slope(double gamma_v, double p_star, double T_star) {
  require_positive(p_star, "p_star");
  require_positive(T_star, "T_star");
  if (!(gamma_v > 1.0)) fail(errc::domain, "gamma must exceed 1");
  return (T_star / p_star) * (gamma_v - 1.0) / gamma_v;
}

double isentrope_temperature(double gamma_v, double p_star, double T_star, double p) {
  require_positive(p_star, "p_star");
  require_positive(T_star, "T_star");
  require_positive(p, "p");
  if (!(gamma_v > 1.0)) fail(errc::domain, "gamma must exceed 1");
  return T_star * std::pow(p / p_star, (gamma_v - 1.0) / gamma_v);
}

double isentrope_temperature_general(const StiffenedGasParams& g, double p_hat, double T_hat,
                                     double p) {
  require_positive(T_hat, "T_hat");
  require_positive(p_hat + g.pi, "p_hat + pi");
  require_positive(p + g.pi, "p + pi");
  return T_hat * std::pow((p + g.pi) / (p_hat + g.pi), (g.gamma - 1.0) / g.gamma);
}

namespace {

WaveCurve sample_curve(const StiffenedGasParams& g, WaveKind kind, double p_hat, double T_hat,
                       double p_lo, double p_hi, int n) {
  if (n < 2) fail(errc::invalid, "wave curve needs n >= 2");
  WaveCurve curve;
  curve.kind = kind;
  curve.p_hat = p_hat;
  curve.T_hat = T_hat;
  curve.params = g;
  curve.samples.reserve(static_cast<std::size_t>(n));
  // geometric spacing in the shifted pressure keeps resolution even across
  // decades for the vapor (pi = 0) and stays nondegenerate for liquids
  const double P_lo = p_lo + g.pi;
  const double P_hi = p_hi + g.pi;
  const double ratio = std::log(P_hi / P_lo);
  for (int i = 0; i < n; ++i) {
    double p = P_lo * std::exp(ratio * static_cast<double>(i) / (n - 1)) - g.pi;
    if (i == 0) p = p_lo;
    if (i == n - 1) p = p_hi;
    WaveCurve::Sample s;
    s.p = p;
    s.T = kind == WaveKind::shock ? hugoniot_temperature(g, p_hat, T_hat, p)
                                  : isentrope_temperature_general(g, p_hat, T_hat, p);
    s.rho = density_from_pT(g, p, s.T);
    curve.samples.push_back(s);
  }
  return curve;
}

}  // namespace

WaveCurve sample_hugoniot(const StiffenedGasParams& g, double p_hat, double T_hat, double p_max,
                          int n) {
  if (!(p_max >= p_hat)) fail(errc::invalid, "shock branch needs p_max >= p_hat");
  return sample_curve(g, WaveKind::shock, p_hat, T_hat, p_hat, p_max, n);
}

WaveCurve sample_rarefaction(const StiffenedGasParams& g, double p_hat, double T_hat,
                             double p_min, int n) {
  if (!(p_min <= p_hat)) fail(errc::invalid, "rarefaction branch needs p_min <= p_hat");
  require_positive(p_min + g.pi, "p_min + pi");
  return sample_curve(g, WaveKind::rarefaction, p_hat, T_hat, p_min, p_hat, n);
}

double wave_temperature(const WaveCurve& curve, double p) {
  return curve.kind == WaveKind::shock
             ? hugoniot_temperature(curve.params, curve.p_hat, curve.T_hat, p)
             : isentrope_temperature_general(curve.params, curve.p_hat, curve.T_hat, p);
}

IntersectionReport intersect_saturation_fn(const std::function<double(double)>& T_curve,
                                           const std::function<double(double)>& T_saturation,
                                           double p_lo, double p_hi, int n_scan) {
  if (!(p_lo > 0.0) || !(p_hi > p_lo)) fail(errc::range, "bad intersection pressure range");
  if (n_scan < 2) fail(errc::invalid, "n_scan must be >= 2");

  auto distance = [&](double p) { return T_curve(p) - T_saturation(p); };

  IntersectionReport rep;
  rep.found = false;
  rep.p = rep.T = 0.0;

  const double log_lo = std::log(p_lo);
  const double step = (std::log(p_hi) - log_lo) / (n_scan - 1);
  double p_prev = p_lo;
  double d_prev = distance(p_lo);
  rep.min_signed_distance = d_prev;
  rep.p_at_min = p_lo;
  double cross_lo = 0.0, cross_hi = 0.0;
  for (int i = 1; i < n_scan; ++i) {
    const double p = i == n_scan - 1 ? p_hi : std::exp(log_lo + step * i);
    const double d = distance(p);
    if (d < rep.min_signed_distance) {
      rep.min_signed_distance = d;
      rep.p_at_min = p;
    }
    if (!rep.found && (d == 0.0 || (d < 0.0) != (d_prev < 0.0))) {
      rep.found = true;
      cross_lo = p_prev;
      cross_hi = p;
    }
    p_prev = p;
    d_prev = d;
  }

  if (rep.found) {
    double lo = cross_lo, hi = cross_hi;
    double d_lo = distance(lo);
    for (int i = 0; i < 200 && hi - lo > 1e-12 * hi; ++i) {
      const double mid = 0.5 * (lo + hi);
      const double d_mid = distance(mid);
      if (d_mid == 0.0) {
        lo = hi = mid;
        break;
      }
      if ((d_mid < 0.0) == (d_lo < 0.0)) {
        lo = mid;
        d_lo = d_mid;
      } else {
        hi = mid;
      }
    }
    rep.p = 0.5 * (lo + hi);
    rep.T = T_saturation(rep.p);
    rep.min_signed_distance = std::min(rep.min_signed_distance, 0.0);
    rep.p_at_min = rep.p;
  }

  // slopes at the crossing (if any) or at the closest approach; one-sided
  // differences at the range ends where the callables may not extend
  const double p_ref = rep.found ? rep.p : rep.p_at_min;
  const double dp = 1e-6 * p_ref;
  const double a = std::max(p_ref - dp, p_lo);
  const double b = std::min(p_ref + dp, p_hi);
  rep.slope_curve = (T_curve(b) - T_curve(a)) / (b - a);
  rep.slope_sat = (T_saturation(b) - T_saturation(a)) / (b - a);
  return rep;
}

IntersectionReport intersect_saturation(const WaveCurve& curve, const SaturationCurve& sat) {
  if (curve.samples.empty() || sat.points.empty())
    fail(errc::invalid, "empty curve in intersection test");
  const double curve_lo = curve.samples.front().p;
  const double curve_hi = curve.samples.back().p;
  const double sat_lo = sat.points.front().p_sat;
  const double sat_hi = sat.points.back().p_sat;
  const double p_lo = std::max(curve_lo, sat_lo);
  const double p_hi = std::min(curve_hi, sat_hi);
  if (!(p_lo < p_hi))
    fail(errc::range, "wave curve [" + fmt17(curve_lo) + ", " + fmt17(curve_hi) +
                          "] and saturation curve [" + fmt17(sat_lo) + ", " + fmt17(sat_hi) +
                          "] Pa do not overlap");

  auto T_curve = [&](double p) { return wave_temperature(curve, p); };
  auto T_saturation = [&](double p) {
    // linear interpolation in (ln p, T); the sampled line is strictly
    // monotone in p so the bracketing segment is unique
    auto it = std::lower_bound(sat.points.begin(), sat.points.end(), p,
                               [](const SaturationPoint& pt, double x) { return pt.p_sat < x; });
    if (it == sat.points.begin()) return it->T;
    if (it == sat.points.end()) return (it - 1)->T;
    const SaturationPoint& b = *it;
    const SaturationPoint& a = *(it - 1);
    const double w = (std::log(p) - std::log(a.p_sat)) / (std::log(b.p_sat) - std::log(a.p_sat));
    return a.T + w * (b.T - a.T);
  };
  return intersect_saturation_fn(T_curve, T_saturation, p_lo, p_hi);
}

std::string to_csv(const WaveCurve& curve) {
  const char* kind = curve.kind == WaveKind::shock ? "shock" : "rarefaction";
  std::string out = "p_Pa,T_K,rho_kg_m3,kind\n";
  for (const WaveCurve::Sample& s : curve.samples)
    out += fmt17(s.p) + ',' + fmt17(s.T) + ',' + fmt17(s.rho) + ',' + kind + '\n';
  return out;
}

std::string to_json(const WaveCurve& curve) {
  const char* kind = curve.kind == WaveKind::shock ? "shock" : "rarefaction";
  std::string out = std::string("{\"kind\":\"") + kind + "\",\"p_anchor\":" + fmt17(curve.p_hat) +
                    ",\"T_anchor\":" + fmt17(curve.T_hat) + ",\"samples\":[";
  for (std::size_t i = 0; i < curve.samples.size(); ++i) {
    const WaveCurve::Sample& s = curve.samples[i];
    if (i) out += ',';
    out += "{\"p\":" + fmt17(s.p) + ",\"T\":" + fmt17(s.T) + ",\"rho\":" + fmt17(s.rho) + "}";
  }
  out += "]}\n";
  return out;
}

std::string to_json(const IntersectionReport& rep) {
  std::string out = std::string("{\"found\":") + (rep.found ? "true" : "false");
  if (rep.found) out += ",\"p\":" + fmt17(rep.p) + ",\"T\":" + fmt17(rep.T);
  out += ",\"min_signed_distance\":" + fmt17(rep.min_signed_distance) +
         ",\"p_at_min\":" + fmt17(rep.p_at_min) + ",\"slope_curve\":" + fmt17(rep.slope_curve) +
         ",\"slope_sat\":" + fmt17(rep.slope_sat) + "}\n";
  return out;
}

}  // namespace pw
