// End-to-end checks of the command-line front end: schemas, exit codes,
// config precedence, and byte-identical reruns.

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

const char* cli_path() { return ZONAL_CLI_PATH; }

struct RunResult {
  int exit_code = -1;
  std::string stdout_text;
};

RunResult run(const std::string& args, const std::string& tag) {
  const std::string out_file = std::string("/tmp/zonal_cli_") + tag + ".out";
  const std::string cmd = std::string(cli_path()) + " " + args + " > " + out_file + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(status);
  std::ifstream f(out_file, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  r.stdout_text = ss.str();
  return r;
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream ss(s);
  std::string line;
  while (std::getline(ss, line)) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("spectrum subcommand emits the documented rows") {
  RunResult r = run("spectrum --zone 0 --kappa 1 --lambda 1 --p-max 2 --format csv", "spectrum");
  REQUIRE(r.exit_code == 0);
  auto lines = lines_of(r.stdout_text);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "p,energy,multiplicity");
  CHECK(lines[1] == "0,1,1");
  CHECK(lines[2] == "1,3,1");
  CHECK(lines[3] == "2,5,1");
}

TEST_CASE("verify-eigen reports the pair count") {
  RunResult r = run("verify-eigen --max-degree 8", "verify");
  REQUIRE(r.exit_code == 0);
  // pairs (p,q) with p+q <= 8: 45
  CHECK(r.stdout_text == "checked 45 eigen-relations, 0 failures\n");

  RunResult half = run("verify-eigen --max-degree 4 --lambda 1/2 --format json", "verify_json");
  REQUIRE(half.exit_code == 0);
  CHECK(half.stdout_text.find("\"failures\": 0") != std::string::npos);
  CHECK(half.stdout_text.find("\"terms\"") != std::string::npos);  // serialized polynomials
}

TEST_CASE("lamb subcommand row for the total mode") {
  RunResult r = run("lamb --l 0 --mode total --format csv", "lamb");
  REQUIRE(r.exit_code == 0);
  auto lines = lines_of(r.stdout_text);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "l,mode,density,re_sigma,im_sigma,delta_eV,delta_MHz,abs_err");
  // sigma_total ~ -1.1283792 i and Delta ~ 813.86 MHz
  CHECK(lines[1].find("0,total,stirling,") == 0);
  CHECK(lines[1].find("-1.128379") != std::string::npos);
  CHECK(lines[1].find("813.86") != std::string::npos);
}

TEST_CASE("byte-identical reruns") {
  const std::string args = "lamb --l-max 2 --mode both --tol 1e-7";
  RunResult a = run(args, "det_a");
  RunResult b = run(args, "det_b");
  REQUIRE(a.exit_code == 0);
  CHECK(a.stdout_text == b.stdout_text);

  RunResult k1 = run("kernels --kind wiener-zonal --zone 1 --t 0.5 --grid 4", "det_k1");
  RunResult k2 = run("kernels --kind wiener-zonal --zone 1 --t 0.5 --grid 4", "det_k2");
  REQUIRE(k1.exit_code == 0);
  CHECK(k1.stdout_text == k2.stdout_text);
}

TEST_CASE("exit codes: argument errors and computation failures") {
  CHECK(run("spectrum --zone -3", "bad_zone").exit_code == 2);
  CHECK(run("nonsense-subcommand", "bad_cmd").exit_code == 2);
  CHECK(run("spectrum --lambda not_a_rational", "bad_lambda").exit_code == 2);
  CHECK(run("spectrum --lambda -1/2", "neg_lambda").exit_code == 2);
  // Schrodinger partition at the caustic lambda t = pi: computation failure
  RunResult caustic =
      run("partition --kind schrodinger --t-min 3.14159265358979 --t-max 4 --steps 2", "caustic");
  CHECK(caustic.exit_code == 1);
  CHECK(caustic.stdout_text.empty());  // fail-fast: no partial output
}

TEST_CASE("config file precedence: flags override keys override defaults") {
  const std::string cfg = "/tmp/zonal_cli_test.cfg";
  {
    std::ofstream f(cfg);
    f << "p-max=1\nzone=0\n";
  }
  RunResult from_cfg = run("spectrum --config " + cfg, "cfg1");
  REQUIRE(from_cfg.exit_code == 0);
  CHECK(lines_of(from_cfg.stdout_text).size() == 3);  // header + p=0,1

  RunResult overridden = run("spectrum --config " + cfg + " --p-max 3", "cfg2");
  REQUIRE(overridden.exit_code == 0);
  CHECK(lines_of(overridden.stdout_text).size() == 5);  // flag wins over key
}

TEST_CASE("coulomb matrix CSV schema") {
  RunResult r = run("coulomb --report matrix --zone-a 0 --zone-b 0 --m-min 0 --m-max 2", "cmat");
  REQUIRE(r.exit_code == 0);
  auto lines = lines_of(r.stdout_text);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "a,b,m,re,im,abs_err");
  CHECK(lines[1].rfind("0,0,0,", 0) == 0);
}
