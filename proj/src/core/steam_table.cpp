#include "steam_table.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "error.hpp"
#include "text.hpp"

namespace pw {

namespace {

void check_row(const SteamTableRow& r, std::size_t line) {
  const std::string at = " (line " + std::to_string(line) + ")";
  if (!(r.T > 0.0)) fail(errc::parse, "nonpositive temperature" + at);
  if (!(r.p_sat > 0.0)) fail(errc::parse, "nonpositive saturation pressure" + at);
  if (!(r.rho_V > 0.0) || !(r.rho_L > 0.0)) fail(errc::parse, "nonpositive density" + at);
  if (!(r.a_V > 0.0) || !(r.a_L > 0.0)) fail(errc::parse, "nonpositive sound speed" + at);
  if (!(r.cp_L > 0.0)) fail(errc::parse, "nonpositive heat capacity" + at);
  if (!(r.rho_L > r.rho_V)) fail(errc::parse, "rho_L must exceed rho_V" + at);
}

}  // namespace

SteamTable load_table(std::istream& in) {
  SteamTable table;
  std::string line;
  std::size_t line_no = 0;

  if (!std::getline(in, line)) fail(errc::parse, "empty table");
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kSteamTableHeader)
    fail(errc::parse, "bad header, expected '" + std::string(kSteamTableHeader) + "' (line 1)");

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> fields = split_csv_line(line);
    if (fields.size() != 11)
      fail(errc::parse,
           "expected 11 fields, got " + std::to_string(fields.size()) + " (line " +
               std::to_string(line_no) + ")");
    const std::string ctx = "line " + std::to_string(line_no);
    SteamTableRow r;
    r.T = parse_double(fields[0], ctx);
    r.p_sat = parse_double(fields[1], ctx);
    r.rho_V = parse_double(fields[2], ctx);
    r.rho_L = parse_double(fields[3], ctx);
    r.a_V = parse_double(fields[4], ctx);
    r.a_L = parse_double(fields[5], ctx);
    r.s_V = parse_double(fields[6], ctx);
    r.s_L = parse_double(fields[7], ctx);
    r.e_V = parse_double(fields[8], ctx);
    r.e_L = parse_double(fields[9], ctx);
    r.cp_L = parse_double(fields[10], ctx);
    check_row(r, line_no);
    if (!table.rows.empty()) {
      if (!(r.T > table.rows.back().T))
        fail(errc::parse, "temperatures must increase strictly (line " +
                              std::to_string(line_no) + ")");
      if (!(r.p_sat > table.rows.back().p_sat))
        fail(errc::parse, "saturation pressure must increase strictly (line " +
                              std::to_string(line_no) + ")");
    }
    table.rows.push_back(r);
  }
  if (table.rows.size() < 2) fail(errc::parse, "table needs at least two rows");
  return table;
}

SteamTable load_table_text(const std::string& text) {
  std::istringstream in(text);
  return load_table(in);
}

SteamTable load_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse, "cannot open table file '" + path + "'");
  return load_table(in);
}

SteamTableRow query_saturation(const SteamTable& table, double T) {
  if (table.rows.size() < 2) fail(errc::invalid, "table not loaded");
  if (!(T >= table.rows.front().T) || !(T <= table.rows.back().T))
    fail(errc::range, "T=" + fmt17(T) + " outside table span [" + fmt17(table.rows.front().T) +
                          ", " + fmt17(table.rows.back().T) + "] K");
  auto it = std::lower_bound(table.rows.begin(), table.rows.end(), T,
                             [](const SteamTableRow& r, double x) { return r.T < x; });
  if (it->T == T) return *it;
  const SteamTableRow& b = *it;
  const SteamTableRow& a = *(it - 1);
  const double w = (T - a.T) / (b.T - a.T);
  auto mix = [w](double x, double y) { return x + w * (y - x); };
  SteamTableRow r;
  r.T = T;
  r.p_sat = mix(a.p_sat, b.p_sat);
  r.rho_V = mix(a.rho_V, b.rho_V);
  r.rho_L = mix(a.rho_L, b.rho_L);
  r.a_V = mix(a.a_V, b.a_V);
  r.a_L = mix(a.a_L, b.a_L);
  r.s_V = mix(a.s_V, b.s_V);
  r.s_L = mix(a.s_L, b.s_L);
  r.e_V = mix(a.e_V, b.e_V);
  r.e_L = mix(a.e_L, b.e_L);
  r.cp_L = mix(a.cp_L, b.cp_L);
  return r;
}

StiffenedGasParams fit_vapor_params(const SteamTableRow& row) {
  StiffenedGasParams g;
  g.pi = 0.0;
  g.gamma = row.a_V * row.a_V * row.rho_V / row.p_sat;
  if (!(g.gamma > 1.0))
    fail(errc::degenerate, "vapor fit at T=" + fmt17(row.T) + " gives gamma=" + fmt17(g.gamma));
  g.q = row.e_V - row.p_sat / (row.rho_V * (g.gamma - 1.0));
  g.C = row.p_sat / (row.T * row.rho_V * (g.gamma - 1.0));
  g.q_prime =
      row.s_V - g.C * (g.gamma * std::log(row.T) - (g.gamma - 1.0) * std::log(row.p_sat));
  return g;
}

StiffenedGasParams fit_liquid_params(const SteamTableRow& row, bool* pi_nonpositive) {
  StiffenedGasParams g;
  g.gamma = 1.0 + row.a_L * row.a_L / (row.cp_L * row.T);
  if (!(g.gamma > 1.0))
    fail(errc::degenerate, "liquid fit at T=" + fmt17(row.T) + " gives gamma=" + fmt17(g.gamma));
  g.pi = row.a_L * row.a_L * row.rho_L / g.gamma - row.p_sat;
  if (pi_nonpositive) *pi_nonpositive = !(g.pi > 0.0);
  g.q = row.e_L - row.cp_L * row.T + row.p_sat / row.rho_L;
  // p + pi = a^2 rho / gamma > 0 even when pi itself is flagged nonpositive
  const double P = row.p_sat + g.pi;
  g.C = P / (row.T * row.rho_L * (g.gamma - 1.0));
  g.q_prime = row.s_L - g.C * (g.gamma * std::log(row.T) - (g.gamma - 1.0) * std::log(P));
  return g;
}

LocalFit fit_row(const SteamTableRow& row) {
  LocalFit fit;
  fit.T_anchor = row.T;
  fit.vapor = fit_vapor_params(row);
  fit.liquid = fit_liquid_params(row, &fit.liquid_pi_nonpositive);
  return fit;
}

LocalFit fit_at(const SteamTable& table, double T) { return fit_row(query_saturation(table, T)); }

std::vector<LocalFit> fit_curve(const SteamTable& table, double T_min, double T_max, int n) {
  if (n < 1) fail(errc::invalid, "fit curve needs n >= 1");
  if (n > 1 && !(T_min < T_max)) fail(errc::invalid, "need T_min < T_max");
  std::vector<LocalFit> fits;
  fits.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double T =
        n == 1 ? T_min : T_min + (T_max - T_min) * static_cast<double>(i) / (n - 1);
    fits.push_back(fit_at(table, T));
  }
  return fits;
}

std::string fits_to_csv(const std::vector<LocalFit>& fits) {
  std::string out = "T_K,phase,gamma,pi_Pa,C,q,q_prime\n";
  for (const LocalFit& f : fits) {
    out += fmt17(f.T_anchor) + ",vapor," + fmt17(f.vapor.gamma) + ',' + fmt17(f.vapor.pi) + ',' +
           fmt17(f.vapor.C) + ',' + fmt17(f.vapor.q) + ',' + fmt17(f.vapor.q_prime) + '\n';
    out += fmt17(f.T_anchor) + ",liquid," + fmt17(f.liquid.gamma) + ',' + fmt17(f.liquid.pi) +
           ',' + fmt17(f.liquid.C) + ',' + fmt17(f.liquid.q) + ',' + fmt17(f.liquid.q_prime) +
           '\n';
  }
  return out;
}

namespace {

std::string fit_params_json(const StiffenedGasParams& g) {
  return "{\"gamma\":" + fmt17(g.gamma) + ",\"pi\":" + fmt17(g.pi) + ",\"C\":" + fmt17(g.C) +
         ",\"q\":" + fmt17(g.q) + ",\"q_prime\":" + fmt17(g.q_prime) + "}";
}

}  // namespace

std::string fits_to_json(const std::vector<LocalFit>& fits) {
  std::string out = "[";
  for (std::size_t i = 0; i < fits.size(); ++i) {
    const LocalFit& f = fits[i];
    if (i) out += ',';
    out += "{\"T_anchor\":" + fmt17(f.T_anchor) + ",\"vapor\":" + fit_params_json(f.vapor) +
           ",\"liquid\":" + fit_params_json(f.liquid) + ",\"liquid_pi_nonpositive\":" +
           (f.liquid_pi_nonpositive ? "true" : "false") + "}";
  }
  out += "]\n";
  return out;
}

}  // namespace pw
