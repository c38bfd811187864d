#include "riemann.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"
#include "text.hpp"

namespace pw {

namespace {

struct Side {
  double rho, u, p;  // initial data
  double P;          // p + pi
  double a;          // sound speed
  double A, B;       // Toro's shock-branch constants, shifted by pi
};

Side make_side(const StiffenedGasParams& g, double rho, double u, double p) {
  if (!(rho > 0.0)) fail(errc::domain, "rho must be positive, got " + fmt17(rho));
  Side s;
  s.rho = rho;
  s.u = u;
  s.p = p;
  s.P = p + g.pi;
  if (!(s.P > 0.0)) fail(errc::domain, "p + pi must be positive, got " + fmt17(s.P));
  s.a = sound_speed(g, p, rho);
  s.A = 2.0 / ((g.gamma + 1.0) * rho);
  s.B = (g.gamma - 1.0) / (g.gamma + 1.0) * s.P;
  return s;
}

// Velocity gained across one wave as a function of the star pressure shift P.
double branch_f(const Side& s, const StiffenedGasParams& g, double P) {
  if (P > s.P) return (P - s.P) * std::sqrt(s.A / (P + s.B));
  return 2.0 * s.a / (g.gamma - 1.0) * (std::pow(P / s.P, (g.gamma - 1.0) / (2.0 * g.gamma)) - 1.0);
}

double branch_df(const Side& s, const StiffenedGasParams& g, double P) {
  if (P > s.P) {
    const double root = std::sqrt(s.A / (P + s.B));
    return root * (1.0 - (P - s.P) / (2.0 * (P + s.B)));
  }
  return std::pow(P / s.P, -(g.gamma + 1.0) / (2.0 * g.gamma)) / (s.rho * s.a);
}

}  // namespace

RiemannSolution solve(const RiemannInput& input) {
  const StiffenedGasParams& g = input.params;
  validate(g, true);
  const Side L = make_side(g, input.rho_l, input.u_l, input.p_l);
  const Side R = make_side(g, input.rho_r, input.u_r, input.p_r);
  const double du = R.u - L.u;

  // positivity: the two rarefactions must not empty the shifted pressure
  if (2.0 * (L.a + R.a) / (g.gamma - 1.0) <= du)
    fail(errc::vacuum, "initial velocities diverge fast enough to create vacuum");

  auto F = [&](double P) { return branch_f(L, g, P) + branch_f(R, g, P) + du; };

  // F is strictly increasing with F(0+) < 0; expand upward to bracket the root
  double lo = 1e-12 * std::min(L.P, R.P);
  double hi = std::max(L.P, R.P);
  for (int i = 0; i < 200 && F(hi) <= 0.0; ++i) hi *= 2.0;
  if (F(hi) <= 0.0) fail(errc::bracket, "failed to bracket the star pressure");

  // two-rarefaction style initial guess, clamped into the bracket
  double P = 0.5 * (L.P + R.P) - 0.125 * du * (L.rho + R.rho) * (L.a + R.a);
  P = std::clamp(P, lo * 2.0, hi);

  const double vel_scale = L.a + R.a + std::fabs(du);
  int used = 0;
  for (int i = 0; i < 200; ++i) {
    ++used;
    const double f = F(P);
    if (f > 0.0)
      hi = P;
    else
      lo = P;
    const double step = f / (branch_df(L, g, P) + branch_df(R, g, P));
    double P_next = P - step;
    if (!(P_next > lo) || !(P_next < hi)) P_next = 0.5 * (lo + hi);
    const bool converged =
        std::fabs(P_next - P) <= 1e-14 * P_next && std::fabs(f) <= 1e-10 * vel_scale;
    P = P_next;
    if (converged) break;
    if (i == 199) fail(errc::convergence, "star-pressure iteration exhausted its budget");
  }

  RiemannSolution sol;
  sol.iterations = used;
  sol.p_star = P - g.pi;
  sol.u_star = 0.5 * (L.u + R.u) + 0.5 * (branch_f(R, g, P) - branch_f(L, g, P));
  sol.contact_speed = sol.u_star;

  const double gp = (g.gamma + 1.0) / (2.0 * g.gamma);
  const double gm = (g.gamma - 1.0) / (2.0 * g.gamma);

  if (P > L.P) {
    sol.left.kind = WaveKind::shock;
    sol.rho_star_l = L.rho * hugoniot_density_ratio(g, L.p, sol.p_star);
    const double S = L.u - L.a * std::sqrt(gp * P / L.P + gm);
    sol.left.head = sol.left.tail = S;
  } else {
    sol.left.kind = WaveKind::rarefaction;
    sol.rho_star_l = L.rho * std::pow(P / L.P, 1.0 / g.gamma);
    const double a_star = L.a * std::pow(P / L.P, gm);
    sol.left.head = L.u - L.a;
    sol.left.tail = sol.u_star - a_star;
  }

  if (P > R.P) {
    sol.right.kind = WaveKind::shock;
    sol.rho_star_r = R.rho * hugoniot_density_ratio(g, R.p, sol.p_star);
    const double S = R.u + R.a * std::sqrt(gp * P / R.P + gm);
    sol.right.head = sol.right.tail = S;
  } else {
    sol.right.kind = WaveKind::rarefaction;
    sol.rho_star_r = R.rho * std::pow(P / R.P, 1.0 / g.gamma);
    const double a_star = R.a * std::pow(P / R.P, gm);
    sol.right.head = R.u + R.a;
    sol.right.tail = sol.u_star + a_star;
  }
  return sol;
}

SampledState sample(const RiemannSolution& sol, const RiemannInput& input, double xi) {
  const StiffenedGasParams& g = input.params;
  const Side L = make_side(g, input.rho_l, input.u_l, input.p_l);
  const Side R = make_side(g, input.rho_r, input.u_r, input.p_r);
  const double exponent = 2.0 * g.gamma / (g.gamma - 1.0);

  if (xi <= sol.left.head) return {L.rho, L.u, L.p};
  if (xi < sol.left.tail) {
    // interior of the left fan: xi = u - a together with the invariant
    // u + 2a/(gamma-1) = const
    const double a = 2.0 / (g.gamma + 1.0) * (L.a + 0.5 * (g.gamma - 1.0) * (L.u - xi));
    const double u = xi + a;
    const double P = L.P * std::pow(a / L.a, exponent);
    return {g.gamma * P / (a * a), u, P - g.pi};
  }
  if (xi <= sol.contact_speed) return {sol.rho_star_l, sol.u_star, sol.p_star};
  if (xi < sol.right.tail) return {sol.rho_star_r, sol.u_star, sol.p_star};
  if (xi < sol.right.head) {
    const double a = 2.0 / (g.gamma + 1.0) * (R.a - 0.5 * (g.gamma - 1.0) * (R.u - xi));
    const double u = xi - a;
    const double P = R.P * std::pow(a / R.a, exponent);
    return {g.gamma * P / (a * a), u, P - g.pi};
  }
  return {R.rho, R.u, R.p};
}

namespace {

// flux triple in the frame moving with speed S
struct Flux {
  double mass, momentum, energy;
};

Flux frame_flux(const StiffenedGasParams& g, double rho, double u, double p, double S) {
  const double v = u - S;
  const double e = energy(g, p, rho);
  return {rho * v, rho * v * v + p, v * (rho * e + 0.5 * rho * v * v + p)};
}

double rel_diff(double x, double y) {
  const double scale = std::max({std::fabs(x), std::fabs(y), 1e-300});
  return std::fabs(x - y) / scale;
}

}  // namespace

std::vector<ShockResidual> verify_rankine_hugoniot(const RiemannSolution& sol,
                                                   const RiemannInput& input) {
  const StiffenedGasParams& g = input.params;
  std::vector<ShockResidual> out;
  if (sol.left.kind == WaveKind::shock) {
    const Flux up = frame_flux(g, input.rho_l, input.u_l, input.p_l, sol.left.head);
    const Flux down = frame_flux(g, sol.rho_star_l, sol.u_star, sol.p_star, sol.left.head);
    out.push_back({-1, rel_diff(up.mass, down.mass), rel_diff(up.momentum, down.momentum),
                   rel_diff(up.energy, down.energy)});
  }
  if (sol.right.kind == WaveKind::shock) {
    const Flux up = frame_flux(g, input.rho_r, input.u_r, input.p_r, sol.right.head);
    const Flux down = frame_flux(g, sol.rho_star_r, sol.u_star, sol.p_star, sol.right.head);
    out.push_back({+1, rel_diff(up.mass, down.mass), rel_diff(up.momentum, down.momentum),
                   rel_diff(up.energy, down.energy)});
  }
  return out;
}

std::string to_json(const RiemannSolution& sol) {
  auto wave_json = [](const WaveFan& w) {
    return std::string("{\"kind\":\"") +
           (w.kind == WaveKind::shock ? "shock" : "rarefaction") +
           "\",\"head\":" + fmt17(w.head) + ",\"tail\":" + fmt17(w.tail) + "}";
  };
  return std::string("{\"p_star\":") + fmt17(sol.p_star) + ",\"u_star\":" + fmt17(sol.u_star) +
         ",\"rho_star_left\":" + fmt17(sol.rho_star_l) +
         ",\"rho_star_right\":" + fmt17(sol.rho_star_r) +
         ",\"contact_speed\":" + fmt17(sol.contact_speed) +
         ",\"left_wave\":" + wave_json(sol.left) + ",\"right_wave\":" + wave_json(sol.right) +
         ",\"iterations\":" + std::to_string(sol.iterations) + "}\n";
}

std::string profile_csv(const RiemannSolution& sol, const RiemannInput& input, double xi_min,
                        double xi_max, int n) {
  if (n < 2) fail(errc::invalid, "profile needs n >= 2");
  if (!(xi_min < xi_max)) fail(errc::invalid, "need xi_min < xi_max");
  std::string out = "xi,rho,u,p,T\n";
  for (int i = 0; i < n; ++i) {
    const double xi = xi_min + (xi_max - xi_min) * static_cast<double>(i) / (n - 1);
    const SampledState st = sample(sol, input, xi);
    const double T = temperature(input.params, st.p, st.rho);
    out += fmt17(xi) + ',' + fmt17(st.rho) + ',' + fmt17(st.u) + ',' + fmt17(st.p) + ',' +
           fmt17(T) + '\n';
  }
  return out;
}

}  // namespace pw
