#pragma once

#include <string>
#include <vector>

#include "waves.hpp"

namespace pw {

// Two constant states separated at x = 0; one stiffened-gas parameter set
// governs both sides (pure-phase problems).
struct RiemannInput {
  double rho_l, u_l, p_l;
  double rho_r, u_r, p_r;
  StiffenedGasParams params;
};

struct WaveFan {
  WaveKind kind;
  double head, tail;  // characteristic speeds; equal for a shock
};

struct RiemannSolution {
  double p_star;       // Pa, continuous across the contact
  double u_star;       // m/s
  double rho_star_l;   // kg/m3 between left wave and contact
  double rho_star_r;   // kg/m3 between contact and right wave
  WaveFan left, right;
  double contact_speed;  // == u_star
  int iterations;
};

// Exact solution of the Riemann problem: p_star is the root of
// f_L(p) + f_R(p) + (u_r - u_l) = 0 with the usual shock/rarefaction branch
// functions written in the shifted pressure P = p + pi. Newton iteration
// safeguarded by a bisection bracket. errc::vacuum when the expansion is
// strong enough that no positive shifted pressure exists.
RiemannSolution solve(const RiemannInput& input);

// Self-similar state (rho, u, p) at xi = x/t, including rarefaction
// interiors; xi beyond the outermost waves returns the initial data exactly.
struct SampledState {
  double rho, u, p;
};
SampledState sample(const RiemannSolution& sol, const RiemannInput& input, double xi);

// Relative jump residuals of the mass/momentum/energy fluxes in the frame of
// each shock. Rarefactions contribute nothing.
struct ShockResidual {
  int side;  // -1 left wave, +1 right wave
  double mass, momentum, energy;
};
std::vector<ShockResidual> verify_rankine_hugoniot(const RiemannSolution& sol,
                                                   const RiemannInput& input);

std::string to_json(const RiemannSolution& sol);
std::string profile_csv(const RiemannSolution& sol, const RiemannInput& input, double xi_min,
                        double xi_max, int n);

}  // namespace pw
