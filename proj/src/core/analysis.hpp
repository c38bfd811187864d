#pragma once

#include <string>
#include <vector>

#include "steam_table.hpp"
#include "waves.hpp"

namespace pw {

// Strictness assertions stop below this temperature: both the parameter fits
// and tabulated data degrade approaching the critical point.
inline constexpr double kStrictnessTmax = 645.0;

struct TheoremSample {
  double T;           // K, saturation anchor
  double p_star;      // Pa
  double slope_wave;  // K/Pa, compression wave curve through the anchor
  double slope_sat;   // K/Pa, saturation line
  double margin;      // slope_wave - slope_sat
  bool excluded;      // above kStrictnessTmax; reported but not asserted
  bool sign1_ok;      // -C_L(gamma_L-1)/(p_*+pi_L) < 0
  bool sign2_ok;      // -C_L*gamma_L + (q_V-q_L)/T_* > 0
};

struct TheoremReport {
  std::vector<TheoremSample> sweep;  // sorted by T
  bool all_strict;    // every included margin > 1e-15*|slope_sat|
  bool all_signs;     // both sign conditions hold at every included sample
  double min_margin;  // over included samples (all samples if none included)
  int n_excluded;
};

// Condensation-by-compression impossibility with one fixed parameter pair:
// at each saturation anchor the admissible-initial-curve slope strictly
// exceeds the saturation slope, so the compression wave curve leaves the
// two-phase region immediately.
TheoremReport verify_condensation_table1(const StiffenedGasParams& vapor,
                                         const StiffenedGasParams& liquid, double T_min,
                                         double T_max, int n);

// Same inequality with per-anchor locally fitted parameters from a real-EOS
// table; saturation pressure and anchor data come from the table itself.
TheoremReport verify_condensation_fitted(const SteamTable& table, double T_min, double T_max,
                                         int n);

struct TraceResult {
  WaveCurve curve;
  IntersectionReport report;
};

// Compression Hugoniot from a vapor anchor (errc::region unless
// T_hat >= T_sat(p_hat)) traced to p_max and intersected with the exact
// saturation line. The theorem predicts found == false.
TraceResult trace_compression(const StiffenedGasParams& vapor,
                              const StiffenedGasParams& liquid, double p_hat, double T_hat,
                              double p_max);

enum class CavitationKind { none, weak };

struct CavitationReport {
  double p0, T0;  // liquid anchor
  CavitationKind kind;
  bool hit;
  double p_hit, T_hit;  // saturation crossing when hit
  double mu_max;        // entropy-balance bound on the vapor mass fraction
};

// Rarefaction from a liquid anchor (errc::region unless p_hat >= p_sat(T_hat))
// traced down to p_min. Reaching the saturation line is weak cavitation; a
// jump to pure vapor never occurs, so the kind is only ever none or weak.
CavitationReport classify_cavitation(const StiffenedGasParams& vapor,
                                     const StiffenedGasParams& liquid, double p_hat,
                                     double T_hat, double p_min);

// Slope excess of the vapor-side isentrope over the saturation line at a
// fitted anchor; positivity is the strong-cavitation contradiction.
double strong_cavitation_contradiction(const LocalFit& fit, double p_star, double T_star);

// Largest vapor mass fraction mu solving s_L(T0) = mu*s_V(T) + (1-mu)*s_L(T)
// with mu in [0,1], over all table temperature pairs (T, T0).
double vapor_mass_fraction_bound(const SteamTable& table);

// Critical entropy estimated as the phase-entropy midpoint of the last row;
// separates every s_L below from every s_V above on a sane table.
double critical_entropy_estimate(const SteamTable& table);

std::string to_csv(const TheoremReport& report);
std::string to_json(const TheoremReport& report);
std::string to_csv(const CavitationReport& report);
std::string to_json(const CavitationReport& report);

}  // namespace pw
