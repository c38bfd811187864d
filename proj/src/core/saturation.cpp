#include "saturation.hpp"

#include <cmath>
#include <utility>

#include "error.hpp"
#include "text.hpp"

namespace pw {

double gibbs_difference(const StiffenedGasParams& vapor, const StiffenedGasParams& liquid,
                        double p, double T) {
  return gibbs(vapor, p, T) - gibbs(liquid, p, T);
}

namespace {

// d(g_V - g_L)/dp = 1/rho_V - 1/rho_L at fixed T.
double gibbs_difference_dp(const StiffenedGasParams& v, const StiffenedGasParams& l, double p,
                           double T) {
  return v.C * (v.gamma - 1.0) * T / (p + v.pi) - l.C * (l.gamma - 1.0) * T / (p + l.pi);
}

// d(g_V - g_L)/dT = -(s_V - s_L) at fixed p.
double gibbs_difference_dT(const StiffenedGasParams& v, const StiffenedGasParams& l, double p,
                           double T) {
  return -(entropy(v, p, T) - entropy(l, p, T));
}

struct Bracket {
  double lo, hi;
};

// Doubling scan; exactly one sign-change cell is accepted. Two crossings
// would mean the parameter set has a second (unphysical) equilibrium inside
// the cap, and picking silently would hide that.
Bracket bracket_in_p(const StiffenedGasParams& v, const StiffenedGasParams& l, double T,
                     const SaturationOptions& opt) {
  double p_prev = opt.p_lo;
  double f_prev = gibbs_difference(v, l, p_prev, T);
  Bracket found{0.0, 0.0};
  int crossings = 0;
  while (p_prev < opt.p_cap) {
    const double p_next = std::min(p_prev * 2.0, opt.p_cap);
    const double f_next = gibbs_difference(v, l, p_next, T);
    if (f_prev == 0.0 || (f_prev < 0.0) != (f_next < 0.0)) {
      if (++crossings == 1) found = {p_prev, p_next};
    }
    p_prev = p_next;
    f_prev = f_next;
    if (p_next == opt.p_cap) break;
  }
  if (crossings == 0)
    fail(errc::bracket, "no Gibbs-equality crossing in p for T=" + fmt17(T));
  if (crossings > 1)
    fail(errc::bracket, "multiple Gibbs-equality crossings in p for T=" + fmt17(T) +
                            "; refusing to choose");
  return found;
}

template <class F>
double bisect(F&& f, double lo, double hi, double rel_width, int max_iter) {
  double f_lo = f(lo);
  for (int i = 0; i < max_iter; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= rel_width * std::fabs(mid)) return mid;
    const double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double p_sat(const StiffenedGasParams& vapor, const StiffenedGasParams& liquid, double T,
             const SaturationOptions& opt) {
  if (!(T > 0.0)) fail(errc::domain, "T must be positive, got " + fmt17(T));
  const Bracket br = bracket_in_p(vapor, liquid, T, opt);
  auto f = [&](double p) { return gibbs_difference(vapor, liquid, p, T); };
  double p = bisect(f, br.lo, br.hi, 1e-12, opt.max_iter);
  // Newton polish; bisection already meets tolerance, this trims the residual
  // toward machine precision.
  for (int i = 0; i < 3; ++i) {
    const double step = f(p) / gibbs_difference_dp(vapor, liquid, p, T);
    const double p_next = p - step;
    if (!(p_next > br.lo) || !(p_next < br.hi)) break;
    p = p_next;
  }
  const double res = std::fabs(f(p));
  if (!(res < opt.tol_g * std::fabs(gibbs(vapor, p, T))))
    fail(errc::convergence, "saturation residual " + fmt17(res) + " exceeds tolerance at T=" +
                                fmt17(T));
  return p;
}

double T_sat(const StiffenedGasParams& vapor, const StiffenedGasParams& liquid, double p,
             const SaturationOptions& opt) {
  if (!(p + vapor.pi > 0.0) || !(p + liquid.pi > 0.0))
    fail(errc::domain, "p outside both phases' admissible range: " + fmt17(p));
  // Guard against the nonphysical second branch of g_V = g_L (it lives far
  // above the band, near 1e9 Pa for the water constants): a bare sign check on
  // the temperature window would accept such pressures.
  const double p_band_lo = p_sat(vapor, liquid, opt.t_lo, opt);
  const double p_band_hi = p_sat(vapor, liquid, opt.t_hi, opt);
  if (!(p >= p_band_lo) || !(p <= p_band_hi))
    fail(errc::range, "p=" + fmt17(p) + " outside the saturation band [" + fmt17(p_band_lo) +
                          ", " + fmt17(p_band_hi) + "] Pa");
  auto f = [&](double T) { return gibbs_difference(vapor, liquid, p, T); };
  const double f_lo = f(opt.t_lo);
  const double f_hi = f(opt.t_hi);
  if ((f_lo < 0.0) == (f_hi < 0.0)) {
    // The band guard passed, so a same-sign window can only mean p sits within
    // rounding of a band edge with the root collapsed onto that endpoint.
    if (p >= p_band_hi * (1.0 - 1e-9)) return opt.t_hi;
    if (p <= p_band_lo * (1.0 + 1e-9)) return opt.t_lo;
    fail(errc::bracket, "gibbs difference does not change sign over the temperature window");
  }
  double T = bisect(f, opt.t_lo, opt.t_hi, 1e-13, opt.max_iter);
  for (int i = 0; i < 3; ++i) {
    const double step = f(T) / gibbs_difference_dT(vapor, liquid, p, T);
    const double T_next = T - step;
    if (!(T_next > opt.t_lo) || !(T_next < opt.t_hi)) break;
    T = T_next;
  }
  return T;
}

double T_sat_warm(const StiffenedGasParams& vapor, const StiffenedGasParams& liquid, double p,
                  double T_guess, const SaturationOptions& opt) {
  double T = T_guess;
  for (int i = 0; i < 12; ++i) {
    const double fT = gibbs_difference(vapor, liquid, p, T);
    const double dT = gibbs_difference_dT(vapor, liquid, p, T);
    if (dT == 0.0) break;
    const double T_next = T - fT / dT;
    if (!(T_next > opt.t_lo) || !(T_next < opt.t_hi)) break;
    const bool done = std::fabs(T_next - T) < 1e-13 * T;
    T = T_next;
    if (done) return T;
  }
  return T_sat(vapor, liquid, p, opt);
}

double dTsat_dp(const StiffenedGasParams& vapor, const StiffenedGasParams& liquid, double p,
                double T) {
  if (!(T > 0.0)) fail(errc::domain, "T must be positive");
  const double numerator = vapor.C * (vapor.gamma - 1.0) / (p + vapor.pi) -
                           liquid.C * (liquid.gamma - 1.0) / (p + liquid.pi);
  const double denominator =
      vapor.C * vapor.gamma - liquid.C * liquid.gamma + (vapor.q - liquid.q) / T;
  const double scale = vapor.C * vapor.gamma + liquid.C * liquid.gamma +
                       std::fabs(vapor.q - liquid.q) / T;
  if (std::fabs(denominator) < 1e-14 * scale)
    fail(errc::degenerate, "entropy jump s_V - s_L vanishes at p=" + fmt17(p) +
                               ", T=" + fmt17(T) + "; slope undefined");
  return T * numerator / denominator;
}

SaturationPoint saturation_point(const StiffenedGasParams& vapor,
                                 const StiffenedGasParams& liquid, double T,
                                 const SaturationOptions& opt) {
  SaturationPoint pt;
  pt.T = T;
  pt.p_sat = p_sat(vapor, liquid, T, opt);
  pt.dT_dp = dTsat_dp(vapor, liquid, pt.p_sat, T);
  pt.vapor = state_from_pT(vapor, pt.p_sat, T);
  pt.liquid = state_from_pT(liquid, pt.p_sat, T);
  pt.near_critical = T > kCriticalT - 0.5;
  return pt;
}

SaturationCurve saturation_curve(const StiffenedGasParams& vapor,
                                 const StiffenedGasParams& liquid, double T_min, double T_max,
                                 int n, const SaturationOptions& opt) {
  if (n < 2) fail(errc::invalid, "curve needs n >= 2");
  if (!(T_min < T_max)) fail(errc::invalid, "need T_min < T_max");
  if (!(T_min >= kTripleT) || !(T_max <= kCriticalT))
    fail(errc::range, "window [" + fmt17(T_min) + ", " + fmt17(T_max) +
                          "] leaves [273.16, 647.096] K");
  SaturationCurve curve;
  curve.points.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double T = T_min + (T_max - T_min) * static_cast<double>(i) / (n - 1);
    try {
      curve.points.push_back(saturation_point(vapor, liquid, T, opt));
    } catch (const Error& e) {
      fail(e.code(), std::string(e.what()) + " (while sampling T=" + fmt17(T) + ")");
    }
  }
  for (std::size_t i = 1; i < curve.points.size(); ++i)
    if (!(curve.points[i].p_sat > curve.points[i - 1].p_sat))
      fail(errc::internal, "saturation pressure not monotone at T=" + fmt17(curve.points[i].T));
  return curve;
}

std::string to_csv(const SaturationCurve& curve) {
  std::string out = "T_K,p_sat_Pa,dTsat_dp_K_per_Pa,rho_V,rho_L,s_V,s_L\n";
  for (const SaturationPoint& pt : curve.points) {
    out += fmt17(pt.T) + ',' + fmt17(pt.p_sat) + ',' + fmt17(pt.dT_dp) + ',' +
           fmt17(pt.vapor.rho) + ',' + fmt17(pt.liquid.rho) + ',' + fmt17(pt.vapor.s) + ',' +
           fmt17(pt.liquid.s) + '\n';
  }
  return out;
}

namespace {

std::string phase_json(const PhaseState& st) {
  return std::string("{\"p\":") + fmt17(st.p) + ",\"rho\":" + fmt17(st.rho) +
         ",\"T\":" + fmt17(st.T) + ",\"e\":" + fmt17(st.e) + ",\"s\":" + fmt17(st.s) +
         ",\"a\":" + fmt17(st.a) + ",\"g\":" + fmt17(st.g) + "}";
}

}  // namespace

std::string to_json(const SaturationCurve& curve) {
  std::string out = "[";
  for (std::size_t i = 0; i < curve.points.size(); ++i) {
    const SaturationPoint& pt = curve.points[i];
    if (i) out += ',';
    out += "{\"T\":" + fmt17(pt.T) + ",\"p_sat\":" + fmt17(pt.p_sat) +
           ",\"dTsat_dp\":" + fmt17(pt.dT_dp) + ",\"near_critical\":" +
           (pt.near_critical ? "true" : "false") + ",\"vapor\":" + phase_json(pt.vapor) +
           ",\"liquid\":" + phase_json(pt.liquid) + "}";
  }
  out += "]\n";
  return out;
}

}  // namespace pw
