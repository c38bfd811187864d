#pragma once

#include <functional>
#include <string>
#include <vector>

#include "saturation.hpp"

namespace pw {

enum class WaveKind { shock, rarefaction };

// Post-shock/pre-shock density ratio rho_*/rho_hat across a shock between
// pressures p_hat and p_star:
//   rho_*/rho_hat = ((g+1)P_* + (g-1)P_hat) / ((g+1)P_hat + (g-1)P_*),
// with P = p + pi.
double hugoniot_density_ratio(const StiffenedGasParams& g, double p_hat, double p_star);

// Temperature T_* on the Hugoniot through (p_hat, T_hat). Equivalent to the
// density ratio combined with the thermal relation T = (p+pi)/(C rho (g-1)):
//   T_*/T_hat = (P_*/P_hat) * ((g+1)P_hat + (g-1)P_*) / ((g+1)P_* + (g-1)P_hat).
double hugoniot_temperature(const StiffenedGasParams& g, double p_hat, double T_hat,
                            double p_star);

// All initial vapor states (p_hat, T_hat) whose compression shock lands on
// (p_star, T_star); pi = 0 form. This is the Hugoniot relation solved for the
// upstream temperature.
double admissible_initial_curve(double gamma_v, double p_star, double T_star, double p_hat);

// Slope dT_hat/dp_hat of that curve at the anchor p_hat = p_star:
//   (T_star/p_star) * (gamma-1)/gamma.
double admissible_initial_slope(double gamma_v, double p_star, double T_star);

// Isentrope through (p_star, T_star) for pi = 0: T = T_star (p/p_star)^((g-1)/g).
double isentrope_temperature(double gamma_v, double p_star, double T_star, double p);

// General-pi isentrope, T = T_hat ((p+pi)/(p_hat+pi))^((g-1)/g); needed for
// liquid expansion waves where pi is large.
double isentrope_temperature_general(const StiffenedGasParams& g, double p_hat, double T_hat,
                                     double p);

struct WaveCurve {
  WaveKind kind;
  double p_hat, T_hat;  // anchor; the curve passes through it exactly
  StiffenedGasParams params;
  struct Sample {
    double p, T, rho;
  };
  std::vector<Sample> samples;  // ordered by increasing p
};

// Shock branch sampled on p in [p_hat, p_max]; rarefaction branch on
// [p_min, p_hat]. n >= 2 samples, geometric in p + pi.
WaveCurve sample_hugoniot(const StiffenedGasParams& g, double p_hat, double T_hat, double p_max,
                          int n);
WaveCurve sample_rarefaction(const StiffenedGasParams& g, double p_hat, double T_hat,
                             double p_min, int n);

// Temperature along a wave curve at arbitrary p within its branch.
double wave_temperature(const WaveCurve& curve, double p);

struct IntersectionReport {
  bool found;
  double p, T;                // crossing point when found
  double min_signed_distance; // min over the sweep of T_curve(p) - T_sat(p), K
  double p_at_min;            // where the minimum is attained
  double slope_curve;         // dT/dp of the wave curve at p (crossing or minimum)
  double slope_sat;           // dT/dp of the saturation line there
};

// Sign-change search of T_curve(p) - T_sat(p) over [p_lo, p_hi]: dense
// geometric sampling (n_scan points) plus bisection refinement. The minimum
// signed distance is always reported so "no intersection" is quantitative.
IntersectionReport intersect_saturation_fn(const std::function<double(double)>& T_curve,
                                           const std::function<double(double)>& T_saturation,
                                           double p_lo, double p_hi, int n_scan = 2048);

// Overload on sampled curves: wave temperatures from the closed forms, the
// saturation temperature interpolated linearly in (ln p, T) between samples.
// errc::range when the pressure ranges do not overlap.
IntersectionReport intersect_saturation(const WaveCurve& curve, const SaturationCurve& sat);

std::string to_csv(const WaveCurve& curve);
std::string to_json(const WaveCurve& curve);
std::string to_json(const IntersectionReport& report);

}  // namespace pw
