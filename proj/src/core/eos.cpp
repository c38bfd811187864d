#include "eos.hpp"

#include <cmath>

#include "error.hpp"
#include "text.hpp"

namespace pw {

namespace {

void require_prho(const StiffenedGasParams& g, double p, double rho) {
  if (!(rho > 0.0)) fail(errc::domain, "rho must be positive, got " + fmt17(rho));
  if (!(p + g.pi > 0.0))
    fail(errc::domain, "p + pi must be positive, got p=" + fmt17(p) + " pi=" + fmt17(g.pi));
}

void require_pT(const StiffenedGasParams& g, double p, double T) {
  if (!(T > 0.0)) fail(errc::domain, "T must be positive, got " + fmt17(T));
  if (!(p + g.pi > 0.0))
    fail(errc::domain, "p + pi must be positive, got p=" + fmt17(p) + " pi=" + fmt17(g.pi));
}

double log_term(const StiffenedGasParams& g, double p, double T) {
  return g.gamma * std::log(T) - (g.gamma - 1.0) * std::log(p + g.pi);
}

}  // namespace

double energy(const StiffenedGasParams& g, double p, double rho) {
  require_prho(g, p, rho);
  return (p + g.gamma * g.pi) / (rho * (g.gamma - 1.0)) + g.q;
}

double temperature(const StiffenedGasParams& g, double p, double rho) {
  require_prho(g, p, rho);
  return (p + g.pi) / (g.C * rho * (g.gamma - 1.0));
}

double density_from_pT(const StiffenedGasParams& g, double p, double T) {
  require_pT(g, p, T);
  return (p + g.pi) / (g.C * T * (g.gamma - 1.0));
}

double sound_speed(const StiffenedGasParams& g, double p, double rho) {
  require_prho(g, p, rho);
  return std::sqrt(g.gamma * (p + g.pi) / rho);
}

double entropy(const StiffenedGasParams& g, double p, double T) {
  require_pT(g, p, T);
  return g.C * log_term(g, p, T) + g.q_prime;
}

double gibbs(const StiffenedGasParams& g, double p, double T) {
  require_pT(g, p, T);
  return g.C * T * g.gamma + g.q - g.C * T * log_term(g, p, T) - T * g.q_prime;
}

PhaseState state_from_pT(const StiffenedGasParams& g, double p, double T) {
  PhaseState st;
  st.p = p;
  st.T = T;
  st.rho = density_from_pT(g, p, T);
  st.e = energy(g, p, st.rho);
  st.s = entropy(g, p, T);
  st.a = sound_speed(g, p, st.rho);
  st.g = gibbs(g, p, T);
  return st;
}

PhaseState state_from_prho(const StiffenedGasParams& g, double p, double rho) {
  return state_from_pT(g, p, temperature(g, p, rho));
}

ConsistencyResidual check_consistency(const StiffenedGasParams& g, double p, double T, double h) {
  require_pT(g, p, T);
  if (!(h > 0.0) || !(h < 1e-3)) fail(errc::invalid, "step h must lie in (0, 1e-3)");

  const double dp = h * (p + g.pi);
  const double dT = h * T;
  // central differences; perturbed states must stay admissible
  const double dgdp = (gibbs(g, p + dp, T) - gibbs(g, p - dp, T)) / (2.0 * dp);
  const double dgdT = (gibbs(g, p, T + dT) - gibbs(g, p, T - dT)) / (2.0 * dT);

  const double v = 1.0 / density_from_pT(g, p, T);
  const double s = entropy(g, p, T);
  return {std::fabs(dgdp - v), std::fabs(dgdT + s)};
}

}  // namespace pw
