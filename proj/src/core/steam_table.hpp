#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "params.hpp"

namespace pw {

// One saturation-line row of an ingested real-EOS property table (SI units).
struct SteamTableRow {
  double T;             // K
  double p_sat;         // Pa
  double rho_V, rho_L;  // kg/m3
  double a_V, a_L;      // m/s
  double s_V, s_L;      // J/(kg K)
  double e_V, e_L;      // J/kg
  double cp_L;          // J/(kg K)
};

struct SteamTable {
  std::vector<SteamTableRow> rows;  // strictly increasing in T
};

inline constexpr char kSteamTableHeader[] =
    "T_K,p_sat_Pa,rho_V,rho_L,a_V,a_L,s_V,s_L,e_V,e_L,cp_L";

// Parse + validate (exact header, strictly increasing T and p_sat, positive
// densities/speeds/heat capacity, rho_L > rho_V, at least two rows).
// errc::parse carries the offending line number.
SteamTable load_table(std::istream& in);
SteamTable load_table_text(const std::string& text);
SteamTable load_table_file(const std::string& path);

// Piecewise-linear interpolation per column; exact on grid points.
// errc::range outside the covered temperature span.
SteamTableRow query_saturation(const SteamTable& table, double T);

// Stiffened-gas parameters that reproduce one table row exactly.
//
// Vapor (pi fixed to 0): gamma from the sound speed, q from the energy, C
// from the thermal relation, q' from the entropy.
StiffenedGasParams fit_vapor_params(const SteamTableRow& row);

// Liquid: q from e = cp*T - p/rho + q; then eliminating pi between
//   rho*(e-q)*(gamma-1) = p + gamma*pi   (energy relation)
//   a^2*rho = gamma*(p + pi)             (sound speed)
// gives gamma = 1 + a^2/(cp*T) and pi = a^2*rho/gamma - p, after which C and
// q' follow as for the vapor. By construction C*gamma = cp exactly.
// pi <= 0 is tolerated but flagged; gamma <= 1 is errc::degenerate.
StiffenedGasParams fit_liquid_params(const SteamTableRow& row, bool* pi_nonpositive = nullptr);

struct LocalFit {
  double T_anchor;
  StiffenedGasParams vapor;
  StiffenedGasParams liquid;
  bool liquid_pi_nonpositive;
};

LocalFit fit_row(const SteamTableRow& row);
LocalFit fit_at(const SteamTable& table, double T);
std::vector<LocalFit> fit_curve(const SteamTable& table, double T_min, double T_max, int n);

// Export: one vapor and one liquid line per anchor.
std::string fits_to_csv(const std::vector<LocalFit>& fits);
std::string fits_to_json(const std::vector<LocalFit>& fits);

}  // namespace pw
