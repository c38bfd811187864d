#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "eos.hpp"
#include "helpers.hpp"
#include "params.hpp"
#include "riemann.hpp"

using pw::RiemannInput;
using pw::StiffenedGasParams;

namespace {

const StiffenedGasParams kIdeal{1.4, 0.0, 718.0, 0.0, 0.0};
const StiffenedGasParams kVapor = pw::table1_vapor();
const StiffenedGasParams kLiquid = pw::table1_liquid();

// Independent reference solver: pure bisection on the pressure function, no
// Newton, no code shared with the library (branch functions restated here).
struct OracleStar {
  double p, u, rho_l, rho_r;
};

double oracle_branch(const StiffenedGasParams& g, double p, double rho_k, double p_k) {
  double P = p + g.pi;
  double Pk = p_k + g.pi;
  if (p > p_k) {
    double A = 2.0 / ((g.gamma + 1.0) * rho_k);
    double B = (g.gamma - 1.0) / (g.gamma + 1.0) * Pk;
    return (P - Pk) * std::sqrt(A / (P + B));
  }
  double a = std::sqrt(g.gamma * Pk / rho_k);
  return 2.0 * a / (g.gamma - 1.0) *
         (std::pow(P / Pk, (g.gamma - 1.0) / (2.0 * g.gamma)) - 1.0);
}

OracleStar oracle_solve(const RiemannInput& in) {
  const StiffenedGasParams& g = in.params;
  auto F = [&](double p) {
    return oracle_branch(g, p, in.rho_l, in.p_l) + oracle_branch(g, p, in.rho_r, in.p_r) +
           (in.u_r - in.u_l);
  };
  double lo = -g.pi + 1e-12 * (std::min(in.p_l, in.p_r) + g.pi);
  double hi = std::max(in.p_l, in.p_r);
  while (F(hi) <= 0.0) hi *= 2.0;
  REQUIRE(F(lo) < 0.0);
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    (F(mid) <= 0.0 ? lo : hi) = mid;
  }
  OracleStar star;
  star.p = 0.5 * (lo + hi);
  star.u = 0.5 * (in.u_l + in.u_r) +
           0.5 * (oracle_branch(g, star.p, in.rho_r, in.p_r) -
                  oracle_branch(g, star.p, in.rho_l, in.p_l));
  auto star_density = [&](double rho_k, double p_k) {
    double P = star.p + g.pi;
    double Pk = p_k + g.pi;
    if (star.p > p_k) {
      double gr = (g.gamma - 1.0) / (g.gamma + 1.0);
      return rho_k * (P / Pk + gr) / (gr * P / Pk + 1.0);
    }
    return rho_k * std::pow(P / Pk, 1.0 / g.gamma);
  };
  star.rho_l = star_density(in.rho_l, in.p_l);
  star.rho_r = star_density(in.rho_r, in.p_r);
  return star;
}

const RiemannInput kSod{1.0, 0.0, 1.0, 0.125, 0.0, 0.1, kIdeal};

}  // namespace

TEST_CASE("classic shock tube matches the bisection reference") {
  pw::RiemannSolution sol = pw::solve(kSod);
  OracleStar ref = oracle_solve(kSod);
  CHECK(std::fabs(sol.p_star - ref.p) < 1e-10);
  CHECK(std::fabs(sol.u_star - ref.u) < 1e-10);
  CHECK(std::fabs(sol.rho_star_l - ref.rho_l) < 1e-10);
  CHECK(std::fabs(sol.rho_star_r - ref.rho_r) < 1e-10);
  CHECK(sol.left.kind == pw::WaveKind::rarefaction);
  CHECK(sol.right.kind == pw::WaveKind::shock);
  CHECK(sol.iterations < 200);

  // pinned values, for the record
  CHECK(std::fabs(sol.p_star - 0.30313017805064474) < 1e-12);
  CHECK(std::fabs(sol.u_star - 0.92745262004894924) < 1e-12);
}

TEST_CASE("equal states produce zero-strength waves") {
  RiemannInput in{0.7, 12.0, 3e5, 0.7, 12.0, 3e5, kVapor};
  pw::RiemannSolution sol = pw::solve(in);
  CHECK(th::rel_diff(sol.p_star, 3e5) < 1e-12);
  CHECK(th::rel_diff(sol.u_star, 12.0) < 1e-12);
  CHECK(th::rel_diff(sol.rho_star_l, 0.7) < 1e-12);
  CHECK(th::rel_diff(sol.rho_star_r, 0.7) < 1e-12);
  CHECK(sol.left.head == sol.left.tail);
  CHECK(sol.right.head == sol.right.tail);
  // zero-strength waves carry zero residuals (rounding may still label one a shock)
  for (const auto& r : pw::verify_rankine_hugoniot(sol, in)) {
    CHECK(r.mass < 1e-10);
    CHECK(r.momentum < 1e-10);
    CHECK(r.energy < 1e-10);
  }
}

TEST_CASE("impinging vapor stream drives a heating shock") {
  double T_hat = 400.0, p_hat = 1e5;
  double rho_hat = pw::density_from_pT(kVapor, p_hat, T_hat);
  RiemannInput in{rho_hat, 50.0, p_hat, rho_hat, 0.0, p_hat, kVapor};
  pw::RiemannSolution sol = pw::solve(in);
  CHECK(sol.p_star > p_hat);
  CHECK(sol.right.kind == pw::WaveKind::shock);
  CHECK(sol.right.head > 0.0);
  double T_star = pw::temperature(kVapor, sol.p_star, sol.rho_star_r);
  CHECK(T_star > T_hat);
  // the star state sits on the shock curve through the right anchor
  CHECK(th::rel_diff(T_star, pw::hugoniot_temperature(kVapor, p_hat, T_hat, sol.p_star)) <
        1e-12);
}

TEST_CASE("sampling returns initial data outside the fan and a continuous interior") {
  pw::RiemannSolution sol = pw::solve(kSod);
  pw::SampledState far_l = pw::sample(sol, kSod, -1e6);
  CHECK(far_l.rho == kSod.rho_l);
  CHECK(far_l.u == kSod.u_l);
  CHECK(far_l.p == kSod.p_l);
  pw::SampledState far_r = pw::sample(sol, kSod, 1e6);
  CHECK(far_r.rho == kSod.rho_r);
  CHECK(far_r.u == kSod.u_r);
  CHECK(far_r.p == kSod.p_r);

  // across the contact: p and u continuous, rho jumps
  double eps = 1e-9;
  pw::SampledState cm = pw::sample(sol, kSod, sol.contact_speed - eps);
  pw::SampledState cp = pw::sample(sol, kSod, sol.contact_speed + eps);
  CHECK(th::rel_diff(cm.p, cp.p) < 1e-12);
  CHECK(th::rel_diff(cm.u, cp.u) < 1e-12);
  CHECK(cm.rho > cp.rho);

  // between left tail and contact: the left star state (xi = 0 for this tube)
  pw::SampledState star = pw::sample(sol, kSod, 0.0);
  CHECK(std::fabs(star.rho - 0.42631942817849311) < 1e-12);
  CHECK(th::rel_diff(star.p, sol.p_star) < 1e-14);
  CHECK(th::rel_diff(star.u, sol.u_star) < 1e-14);
}

TEST_CASE("fan interior states satisfy the characteristic relations") {
  pw::RiemannSolution sol = pw::solve(kSod);
  REQUIRE(sol.left.kind == pw::WaveKind::rarefaction);
  double a_l = std::sqrt(kIdeal.gamma * kSod.p_l / kSod.rho_l);
  double invariant = kSod.u_l + 2.0 * a_l / (kIdeal.gamma - 1.0);
  double s_l = kSod.p_l / std::pow(kSod.rho_l, kIdeal.gamma);
  for (double frac : {0.1, 0.35, 0.6, 0.9}) {
    double xi = sol.left.head + frac * (sol.left.tail - sol.left.head);
    pw::SampledState st = pw::sample(sol, kSod, xi);
    double a = std::sqrt(kIdeal.gamma * st.p / st.rho);
    CHECK(th::rel_diff(st.u + 2.0 * a / (kIdeal.gamma - 1.0), invariant) < 1e-10);
    CHECK(th::rel_diff(st.p / std::pow(st.rho, kIdeal.gamma), s_l) < 1e-10);
    CHECK(std::fabs(st.u - a - xi) < 1e-10);
  }
  // head and tail meet the adjacent constant states
  pw::SampledState head = pw::sample(sol, kSod, sol.left.head + 1e-12);
  CHECK(th::rel_diff(head.rho, kSod.rho_l) < 1e-9);
  pw::SampledState tail = pw::sample(sol, kSod, sol.left.tail - 1e-12);
  CHECK(th::rel_diff(tail.rho, sol.rho_star_l) < 1e-9);
}

TEST_CASE("shock jumps conserve mass, momentum, and energy fluxes") {
  pw::RiemannSolution sod = pw::solve(kSod);
  auto res = pw::verify_rankine_hugoniot(sod, kSod);
  REQUIRE(res.size() == 1);
  CHECK(res[0].side == 1);
  CHECK(res[0].mass < 1e-8);
  CHECK(res[0].momentum < 1e-8);
  CHECK(res[0].energy < 1e-8);

  // liquid tube at pressure ratio 5: acoustic-scale waves on a huge offset
  double T0 = 420.0;
  RiemannInput liq{pw::density_from_pT(kLiquid, 5e5, T0), 0.0, 5e5,
                   pw::density_from_pT(kLiquid, 1e5, T0), 0.0, 1e5, kLiquid};
  pw::RiemannSolution sol = pw::solve(liq);
  auto lres = pw::verify_rankine_hugoniot(sol, liq);
  REQUIRE(!lres.empty());
  for (const auto& r : lres) {
    CHECK(r.mass < 1e-8);
    CHECK(r.momentum < 1e-8);
    CHECK(r.energy < 1e-8);
  }
}

TEST_CASE("entropy rises across shocks and is frozen across rarefactions") {
  pw::RiemannSolution sol = pw::solve(kSod);
  // right shock: post-shock entropy above pre-shock
  double s_pre = pw::entropy(kIdeal, kSod.p_r, pw::temperature(kIdeal, kSod.p_r, kSod.rho_r));
  double s_post =
      pw::entropy(kIdeal, sol.p_star, pw::temperature(kIdeal, sol.p_star, sol.rho_star_r));
  CHECK(s_post > s_pre);
  // left rarefaction: star entropy equals the initial left entropy
  double s_l = pw::entropy(kIdeal, kSod.p_l, pw::temperature(kIdeal, kSod.p_l, kSod.rho_l));
  double s_star =
      pw::entropy(kIdeal, sol.p_star, pw::temperature(kIdeal, sol.p_star, sol.rho_star_l));
  CHECK(th::rel_diff(s_star, s_l) < 1e-12);
}

TEST_CASE("mirrored input mirrors the solution") {
  RiemannInput in{0.4, 30.0, 2e5, 1.1, -10.0, 6e5, kVapor};
  RiemannInput mir{1.1, 10.0, 6e5, 0.4, -30.0, 2e5, kVapor};
  pw::RiemannSolution a = pw::solve(in);
  pw::RiemannSolution b = pw::solve(mir);
  CHECK(th::rel_diff(a.p_star, b.p_star) < 1e-10);
  CHECK(th::rel_diff(a.u_star, -b.u_star) < 1e-10);
  CHECK(th::rel_diff(a.rho_star_l, b.rho_star_r) < 1e-10);
  CHECK(th::rel_diff(a.rho_star_r, b.rho_star_l) < 1e-10);
  CHECK(a.left.kind == b.right.kind);
  CHECK(th::rel_diff(a.left.head, -b.right.head) < 1e-10);
  CHECK(th::rel_diff(a.right.tail, -b.left.tail) < 1e-10);
}

TEST_CASE("random tubes agree with the reference solver in both phases") {
  for (const auto& u : th::latin_hypercube(60, 6, 3777)) {
    for (const StiffenedGasParams& g : {kVapor, kLiquid}) {
      RiemannInput in;
      in.params = g;
      in.p_l = th::lerp_to(5e4, 2e6, u[0]);
      in.p_r = th::lerp_to(5e4, 2e6, u[1]);
      in.rho_l = pw::density_from_pT(g, in.p_l, th::lerp_to(300.0, 600.0, u[2]));
      in.rho_r = pw::density_from_pT(g, in.p_r, th::lerp_to(300.0, 600.0, u[3]));
      in.u_l = th::lerp_to(-80.0, 80.0, u[4]);
      in.u_r = th::lerp_to(-80.0, 80.0, u[5]);
      pw::RiemannSolution sol = pw::solve(in);
      OracleStar ref = oracle_solve(in);
      CHECK(th::rel_diff(sol.p_star, ref.p) < 1e-9);
      CHECK(std::fabs(sol.u_star - ref.u) <
            1e-9 * std::max({1.0, std::fabs(ref.u), std::fabs(in.u_l), std::fabs(in.u_r)}));
      CHECK(th::rel_diff(sol.rho_star_l, ref.rho_l) < 1e-9);
      CHECK(th::rel_diff(sol.rho_star_r, ref.rho_r) < 1e-9);
    }
  }
}

TEST_CASE("strong expansion is rejected as vacuum formation") {
  double rho = pw::density_from_pT(kVapor, 1e5, 400.0);
  RiemannInput in{rho, -2500.0, 1e5, rho, 2500.0, 1e5, kVapor};
  CHECK(th::thrown_code([&] { pw::solve(in); }) == pw::errc::vacuum);
}

TEST_CASE("solution export formats") {
  pw::RiemannSolution sol = pw::solve(kSod);
  std::string json = pw::to_json(sol);
  for (const char* key : {"\"p_star\"", "\"u_star\"", "\"rho_star_left\"", "\"rho_star_right\"",
                          "\"left_wave\"", "\"right_wave\"", "\"contact_speed\"",
                          "\"iterations\"", "\"rarefaction\"", "\"shock\""})
    CHECK(json.find(key) != std::string::npos);

  std::string csv = pw::profile_csv(sol, kSod, -2.0, 2.0, 41);
  CHECK(csv.rfind("xi,rho,u,p,T\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 42);
}
