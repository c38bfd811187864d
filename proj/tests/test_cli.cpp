#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

// Drives the installed binary through a shell; nothing here links the library.
namespace {

struct RunResult {
  int code;
  std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  std::string cmd = env_prefix + PW_CLI_PATH " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string fixture_path() { return PW_TEST_DATA_DIR "/steam_table_if97.csv"; }

std::filesystem::path temp_file(const char* name) {
  auto dir = std::filesystem::temp_directory_path() / "phasewave_cli_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int count_lines(const std::string& text) {
  return static_cast<int>(std::count(text.begin(), text.end(), '\n'));
}

}  // namespace

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("--help").code == 0);
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("satcurve --bogus").code == 2);
  CHECK(run_cli("satcurve --params no-such-preset").code == 2);
  CHECK(run_cli("satcurve --format yaml").code == 2);
  CHECK(run_cli("wavecurve --kind banana --p0 1e5 --T0 400 --pend 2e5").code == 2);
  CHECK(run_cli("wavecurve --p0 1e5 --T0 400 --pend 2e5").code == 2);
  CHECK(run_cli("riemann --left 1,2 --right 1,0,1").code == 2);
  CHECK(run_cli("riemann --left 1,0,1,9 --right 1,0,1").code == 2);
}

TEST_CASE("physical domain errors exit with code 3") {
  CHECK(run_cli("satcurve --tmin 100 --tmax 200").code == 3);
  // velocities diverging faster than the escape speed leave a vacuum
  CHECK(run_cli("riemann --left 0.559,-2500,1e5 --right 0.559,2500,1e5").code == 3);
}

TEST_CASE("satcurve sampling and determinism") {
  RunResult def = run_cli("satcurve");
  CHECK(def.code == 0);
  CHECK(count_lines(def.out) == 201);
  CHECK(def.out.rfind("T_K,p_sat_Pa,dTsat_dp_K_per_Pa,rho_V,rho_L,s_V,s_L\n", 0) == 0);

  RunResult small = run_cli("satcurve --tmin 300 --tmax 500 --n 5");
  CHECK(small.code == 0);
  CHECK(count_lines(small.out) == 6);
  CHECK(small.out.find("\n300,") != std::string::npos);
  CHECK(small.out.find("\n500,") != std::string::npos);

  RunResult two = run_cli("satcurve --tmin 300 --tmax 400 --n 2");
  CHECK(two.code == 0);
  CHECK(count_lines(two.out) == 3);

  // identical invocations produce identical bytes
  RunResult again = run_cli("satcurve --tmin 300 --tmax 500 --n 5");
  CHECK(again.out == small.out);

  RunResult json = run_cli("satcurve --tmin 300 --tmax 400 --n 3 --format json");
  CHECK(json.code == 0);
  CHECK(json.out.find("\"p_sat\"") != std::string::npos);
}

TEST_CASE("satcurve writes the same bytes to a file") {
  auto path = temp_file("satcurve_out.csv");
  std::filesystem::remove(path);
  RunResult to_stdout = run_cli("satcurve --tmin 320 --tmax 360 --n 4");
  RunResult to_file = run_cli("satcurve --tmin 320 --tmax 360 --n 4 --out " + path.string());
  CHECK(to_file.code == 0);
  CHECK(to_file.out.empty());
  CHECK(slurp(path) == to_stdout.out);
  CHECK(run_cli("satcurve --out /nonexistent-dir/x.csv").code == 2);
}

TEST_CASE("wavecurve sampling") {
  RunResult shock = run_cli("wavecurve --kind shock --p0 1e5 --T0 400 --pend 1e6 --n 8");
  CHECK(shock.code == 0);
  CHECK(shock.out.rfind("p_Pa,T_K,rho_kg_m3,kind\n", 0) == 0);
  CHECK(count_lines(shock.out) == 9);
  CHECK(shock.out.find(",shock\n") != std::string::npos);

  RunResult fan =
      run_cli("wavecurve --kind rarefaction --p0 1e5 --T0 400 --pend 4e4 --n 6 --format json");
  CHECK(fan.code == 0);
  CHECK(fan.out.find("\"kind\":\"rarefaction\"") != std::string::npos);

  CHECK(run_cli("wavecurve --kind shock --p0 1e5 --T0 400 --pend 5e4").code == 2);
  CHECK(run_cli("wavecurve --kind rarefaction --p0 1e5 --T0 400 --pend 2e5").code == 2);
}

TEST_CASE("verify table1 passes and reports") {
  RunResult r = run_cli("verify --mode table1 --n 50");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"all_strict\":true") != std::string::npos);
  CHECK(r.out.find("\"all_sign_conditions\":true") != std::string::npos);

  RunResult csv = run_cli("verify --mode table1 --n 10 --format csv");
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind(
            "T_K,p_star_Pa,slope_wave_K_per_Pa,slope_sat_K_per_Pa,margin_K_per_Pa,excluded\n",
            0) == 0);
  CHECK(count_lines(csv.out) == 11);
}

TEST_CASE("verify flags a failed hypothesis with exit 1") {
  // heavy liquid heat capacity keeps the Gibbs crossing but breaks a sign condition
  std::string pair =
      "'{\"vapor\":{\"gamma\":1.43,\"pi\":0,\"C\":1040,\"q\":2.03e6,\"q_prime\":-23000},"
      "\"liquid\":{\"gamma\":2.35,\"pi\":1e9,\"C\":4000,\"q\":-1.167e6,\"q_prime\":40000}}'";
  RunResult r = run_cli("verify --mode table1 --params " + pair +
                        " --tmin 450 --tmax 450 --n 1");
  CHECK(r.code == 1);
  CHECK(r.out.find("\"all_sign_conditions\":false") != std::string::npos);
}

TEST_CASE("verify fitted and cavitation modes use the steam table") {
  RunResult fitted =
      run_cli("verify --mode fitted --table " + fixture_path() + " --tmin 274 --tmax 645 --n 25");
  CHECK(fitted.code == 0);
  CHECK(fitted.out.find("\"all_strict\":true") != std::string::npos);

  RunResult cav = run_cli("verify --mode cavitation --table " + fixture_path() +
                          " --tmin 280 --tmax 640 --n 12");
  CHECK(cav.code == 0);
  CHECK(cav.out.find("\"all_positive\":true") != std::string::npos);

  RunResult cav_csv = run_cli("verify --mode cavitation --table " + fixture_path() +
                              " --tmin 280 --tmax 640 --n 12 --format csv");
  CHECK(cav_csv.code == 0);
  CHECK(cav_csv.out.rfind("T_K,p_sat_Pa,margin_K_per_Pa\n", 0) == 0);
  CHECK(count_lines(cav_csv.out) == 13);
}

TEST_CASE("steam table discovery via flag and environment") {
  RunResult env_ok = run_cli("verify --mode fitted --tmin 300 --tmax 400 --n 10",
                             "PHASEWAVE_TABLE=" + fixture_path() + " ");
  CHECK(env_ok.code == 0);

  CHECK(run_cli("verify --mode fitted", "env -u PHASEWAVE_TABLE ").code == 2);

  auto bad = temp_file("corrupt_table.csv");
  std::ofstream(bad) << "garbage\n";
  CHECK(run_cli("verify --mode fitted --table " + bad.string()).code == 2);
  CHECK(run_cli("verify --mode fitted --table /no/such/table.csv").code == 2);
}

TEST_CASE("fit emits parameter curves") {
  std::string env = "PHASEWAVE_TABLE=" + fixture_path() + " ";
  RunResult csv = run_cli("fit --tmin 300 --tmax 400 --n 4", env);
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("T_K,phase,gamma,pi_Pa,C,q,q_prime\n", 0) == 0);
  CHECK(count_lines(csv.out) == 9);  // four anchors, two phases each
  CHECK(csv.out.find(",vapor,") != std::string::npos);
  CHECK(csv.out.find(",liquid,") != std::string::npos);

  RunResult json = run_cli("fit --tmin 300 --tmax 400 --n 4 --format json", env);
  CHECK(json.code == 0);
  CHECK(json.out.find("\"T_anchor\":300") != std::string::npos);

  // window defaults to the table span
  RunResult whole = run_cli("fit --n 3", env);
  CHECK(whole.code == 0);
  CHECK(whole.out.find("\n647,") != std::string::npos);
}

TEST_CASE("riemann star state and profile") {
  RunResult same = run_cli("riemann --left 0.559,0,1e5 --right 0.559,0,1e5");
  CHECK(same.code == 0);
  CHECK(same.out.find("\"u_star\":0,") != std::string::npos);
  CHECK(same.out.find("\"iterations\":") != std::string::npos);

  auto star_path = temp_file("riemann_star.json");
  auto prof_path = temp_file("riemann_profile.csv");
  std::filesystem::remove(star_path);
  std::filesystem::remove(prof_path);
  RunResult r = run_cli("riemann --left 0.7,50,2e5 --right 0.5,0,1e5 --out " + star_path.string() +
                        " --profile " + prof_path.string() + " --n 33");
  CHECK(r.code == 0);
  std::string star = slurp(star_path);
  CHECK(star.find("\"p_star\":") != std::string::npos);
  std::string prof = slurp(prof_path);
  CHECK(prof.rfind("xi,rho,u,p,T\n", 0) == 0);
  CHECK(count_lines(prof) == 34);

  // identical solves profile identically
  RunResult again = run_cli("riemann --left 0.7,50,2e5 --right 0.5,0,1e5");
  RunResult first = run_cli("riemann --left 0.7,50,2e5 --right 0.5,0,1e5");
  CHECK(again.out == first.out);
}
