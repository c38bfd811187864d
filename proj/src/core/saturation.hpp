#pragma once

#include <string>
#include <vector>

#include "eos.hpp"

namespace pw {

inline constexpr double kTripleT = 273.16;   // K
inline constexpr double kCriticalT = 647.096;  // K

struct SaturationOptions {
  double tol_g = 1e-6;   // accepted |g_V-g_L| relative to |g_V|
  double p_lo = 1.0;     // Pa, scan start
  double p_cap = 5e8;    // Pa, scan cap; the spurious high-pressure Gibbs
                         // crossing sits above this for physical parameters
  double t_lo = kTripleT;
  double t_hi = kCriticalT;
  int max_iter = 200;
};

// Equilibrium point: g_V(p_sat,T) = g_L(p_sat,T), both phase states attached.
struct SaturationPoint {
  double T;        // K
  double p_sat;    // Pa
  double dT_dp;    // K/Pa, slope of T_sat(p)
  PhaseState vapor;
  PhaseState liquid;
  bool near_critical;  // within 0.5 K of the critical temperature
};

struct SaturationCurve {
  std::vector<SaturationPoint> points;  // strictly increasing in T and p_sat
};

// Gibbs difference g_V - g_L; its root in p at fixed T is the saturation
// pressure. Exposed for oracle-style checks.
double gibbs_difference(const StiffenedGasParams& vapor, const StiffenedGasParams& liquid,
                        double p, double T);

// Root of the Gibbs difference in p. Doubling scan over [p_lo, p_cap] must
// find exactly one sign change (errc::bracket otherwise), then bisection to
// 1e-12 relative width with a short Newton polish.
double p_sat(const StiffenedGasParams& vapor, const StiffenedGasParams& liquid, double T,
             const SaturationOptions& opt = {});

// Inverse: root in T over [t_lo, t_hi] at fixed p. The Gibbs difference is
// strictly decreasing in T on the physical branch, so the root is unique.
double T_sat(const StiffenedGasParams& vapor, const StiffenedGasParams& liquid, double p,
             const SaturationOptions& opt = {});

// Warm-started Newton for sweep loops; falls back to the bracketed solve
// whenever the iteration leaves [t_lo, t_hi] or stalls.
double T_sat_warm(const StiffenedGasParams& vapor, const StiffenedGasParams& liquid, double p,
                  double T_guess, const SaturationOptions& opt = {});

// Closed-form slope of T_sat(p) from the implicit function theorem:
//   dT/dp = T*(C_V(g_V-1)/(p+pi_V) - C_L(g_L-1)/(p+pi_L))
//           / (C_V g_V - C_L g_L + (q_V-q_L)/T).
// The denominator equals s_V - s_L on the saturation line. errc::degenerate
// if it vanishes.
double dTsat_dp(const StiffenedGasParams& vapor, const StiffenedGasParams& liquid, double p,
                double T);

SaturationPoint saturation_point(const StiffenedGasParams& vapor,
                                 const StiffenedGasParams& liquid, double T,
                                 const SaturationOptions& opt = {});

SaturationCurve saturation_curve(const StiffenedGasParams& vapor,
                                 const StiffenedGasParams& liquid, double T_min, double T_max,
                                 int n, const SaturationOptions& opt = {});

std::string to_csv(const SaturationCurve& curve);
std::string to_json(const SaturationCurve& curve);

}  // namespace pw
