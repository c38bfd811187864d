#pragma once

#include "params.hpp"

namespace pw {

// A thermodynamic state of one phase. Every derived field is consistent with
// (p, rho) under the owning parameter set; recomputation reproduces stored
// values to 1e-12 relative.
struct PhaseState {
  double p;    // Pa
  double rho;  // kg/m3
  double T;    // K
  double e;    // J/kg
  double s;    // J/(kg K)
  double a;    // m/s
  double g;    // J/kg
};

// e = (p + gamma*pi)/(rho*(gamma-1)) + q
double energy(const StiffenedGasParams& g, double p, double rho);

// T = (p + pi)/(C*rho*(gamma-1))
double temperature(const StiffenedGasParams& g, double p, double rho);

// rho = (p + pi)/(C*T*(gamma-1)); inverse of temperature()
double density_from_pT(const StiffenedGasParams& g, double p, double T);

// a = sqrt(gamma*(p + pi)/rho)
double sound_speed(const StiffenedGasParams& g, double p, double rho);

// s = C*ln(T^gamma/(p+pi)^(gamma-1)) + q'. The logarithm is evaluated as
// gamma*ln T - (gamma-1)*ln(p+pi) so T^gamma never overflows.
double entropy(const StiffenedGasParams& g, double p, double T);

// Specific Gibbs energy in closed form,
//   g = C*T*gamma + q - C*T*ln(T^gamma/(p+pi)^(gamma-1)) - T*q',
// identical to e + p/rho - T*s assembled from the relations above.
double gibbs(const StiffenedGasParams& g, double p, double T);

PhaseState state_from_pT(const StiffenedGasParams& g, double p, double T);
PhaseState state_from_prho(const StiffenedGasParams& g, double p, double rho);

// Central finite-difference residuals of the Gibbs relations dg/dp = 1/rho
// and dg/dT = -s. Perturbations are h*(p+pi) and h*T so both phases see the
// same relative step regardless of the pi offset. Residuals are absolute;
// both decay at second order in h.
struct ConsistencyResidual {
  double dgdp_minus_v;  // |dg/dp - 1/rho|
  double dgdT_plus_s;   // |dg/dT + s|
};
ConsistencyResidual check_consistency(const StiffenedGasParams& g, double p, double T, double h);

}  // namespace pw
