#pragma once

#include <string>

namespace pw {

// Stiffened-gas constants for one phase. Setting pi=0, q=0 recovers the
// ideal gas law with R = C*(gamma-1).
struct StiffenedGasParams {
  double gamma;    // adiabatic exponent, > 1
  double pi;       // pressure offset, Pa
  double C;        // heat-capacity constant, J/(kg K); cv = C, cp = C*gamma
  double q;        // energy offset, J/kg
  double q_prime;  // entropy offset, J/(kg K)
};

// gamma > 1 and C > 0 always; pi >= 0 unless the caller opts into fitted
// parameter sets where a nonpositive offset is tolerated (flagged upstream).
void validate(const StiffenedGasParams& g, bool allow_nonpositive_pi = false);

// Reference parameter sets for water (SI units).
StiffenedGasParams table1_vapor();
StiffenedGasParams table1_liquid();

// Preset lookup by name ("table1-vapor", "table1-liquid"); throws errc::invalid.
StiffenedGasParams preset(const std::string& name);

// JSON object with keys gamma, pi, C, q, q_prime.
StiffenedGasParams params_from_json(const std::string& text);
std::string params_to_json(const StiffenedGasParams& g);

// Pair document {"vapor": {...}, "liquid": {...}}.
struct ParamsPair {
  StiffenedGasParams vapor;
  StiffenedGasParams liquid;
};
ParamsPair params_pair_from_json(const std::string& text);

}  // namespace pw
