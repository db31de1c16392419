#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

// End-to-end checks against the installed CLI binary (path injected by the
// build). Output parsing stays loose on values but strict on formats and
// exit codes.

namespace {

struct CmdResult {
  int status = -1;
  std::string out;
};

CmdResult run_cli(const std::string& args, const std::string& env = "") {
  std::string cmd = std::string(QSEP_CLI_PATH) + " " + args + " 2>/dev/null";
  if (!env.empty()) cmd = "env " + env + " " + cmd;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CmdResult result;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof(buf), pipe)) result.out.append(buf, n);
  const int rc = pclose(pipe);
  result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return result;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("bound subcommand prints the closed-form value") {
  const CmdResult r = run_cli("bound --family w --n-qubits 3 --traced 0");
  CHECK(r.status == 0);
  CHECK(r.out == "0.2\n");
  const CmdResult ghz = run_cli("bound --family ghz --n-qubits 4");
  CHECK(ghz.status == 0);
  CHECK(ghz.out.rfind("0.0909090909091", 0) == 0);
}

TEST_CASE("threshold subcommand solves the q = 1 two-qubit family") {
  const CmdResult r = run_cli("threshold --family w --n-qubits 2 --q 1");
  CHECK(r.status == 0);
  const double x = std::strtod(r.out.c_str(), nullptr);
  CHECK(std::fabs(x - 0.6593) < 1e-3);
}

TEST_CASE("spectrum subcommand emits CSV with the documented header") {
  const CmdResult r = run_cli("spectrum --family werner --n-qubits 2 --x 0.5 --format csv");
  CHECK(r.status == 0);
  CHECK(r.out == "value,multiplicity\n0.625,1\n0.125,3\n");
  // Oracle route agrees on the dominant eigenvalue.
  const CmdResult oracle =
      run_cli("spectrum --family werner --n-qubits 2 --x 0.5 --format csv --via oracle");
  CHECK(oracle.status == 0);
  CHECK(oracle.out.find("0.625,1") != std::string::npos);
}

TEST_CASE("flag errors exit with code 2") {
  CHECK(run_cli("threshold --family nope --n-qubits 2 --q 1").status == 2);
  CHECK(run_cli("bound").status == 2);                                   // missing --family
  CHECK(run_cli("threshold --family w --n-qubits 2 --q -3").status == 2);  // invalid q
  CHECK(run_cli("nonsense").status == 2);
}

TEST_CASE("curve output is byte-identical across runs") {
  const std::string args =
      "curve --family w --n-qubits 2 --q-min 0.5 --q-max 50 --points 12 --format csv";
  const CmdResult a = run_cli(args);
  const CmdResult b = run_cli(args);
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("q,x_star\n", 0) == 0);
  // Worker override must not change the merged output.
  const CmdResult threaded = run_cli(args, "QSEP_THREADS=3");
  CHECK(threaded.out == a.out);
}

TEST_CASE("verify subcommand passes on a small sweep") {
  const CmdResult r = run_cli("verify --max-qubits 4 --x-step 0.2");
  CHECK(r.status == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
}

TEST_CASE("entropy subcommand reports the conditional value") {
  const CmdResult r = run_cli("entropy --family ghz --n-qubits 3 --x 0.2 --q 2 --format json");
  CHECK(r.status == 0);
  CHECK(r.out.find("ar_conditional") != std::string::npos);
  CHECK(r.out.find("power_sum_ratio") != std::string::npos);
}

TEST_CASE("ppt subcommand reports threshold and pointwise minimum eigenvalue") {
  const CmdResult threshold = run_cli("ppt --family w --n-qubits 2 --tol 1e-9");
  CHECK(threshold.status == 0);
  CHECK(std::fabs(std::strtod(threshold.out.c_str(), nullptr) - 0.25) < 1e-6);
  const CmdResult point = run_cli("ppt --family w --n-qubits 2 --x 0.5");
  CHECK(point.status == 0);
  CHECK(std::fabs(std::strtod(point.out.c_str(), nullptr) + 1.0 / 6.0) < 1e-9);
}

TEST_CASE("reproduce writes figure CSVs") {
  const CmdResult r = run_cli("reproduce --figure 2 --output-dir .");
  CHECK(r.status == 0);
  const std::string csv = slurp("fig2.csv");
  CHECK(csv.rfind("q,x_star\n", 0) == 0);
  // 61 samples plus header.
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 62);
  std::remove("fig2.csv");
}
