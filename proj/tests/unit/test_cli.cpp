// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string cli_path() {
  const char* env = std::getenv("WETBEAM_CLI");
  REQUIRE_MESSAGE(env != nullptr, "WETBEAM_CLI must point at the wetbeam binary");
  return env;
}

int run(const std::string& args) {
  const std::string cmd = cli_path() + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("exit code 0 on success") {
  CHECK(run("theta --n 5 --out /tmp/wetbeam_cli_theta.csv") == 0);
  const std::string text = slurp("/tmp/wetbeam_cli_theta.csv");
  CHECK(text.find("n,theta_rad") != std::string::npos);
  CHECK(run("--version") == 0);
}

TEST_CASE("exit code 1 on configuration problems") {
  CHECK(run("mcrlb-sweep") == 1);                    // missing seed
  CHECK(run("no-such-subcommand") == 1);             // unknown subcommand
  CHECK(run("theta") == 1);                          // missing n
  CHECK(run("mcrlb-sweep --config /tmp/wetbeam_cli_missing.cfg") == 1);

  const std::string bad_cfg = "/tmp/wetbeam_cli_bad.cfg";
  {
    std::ofstream out(bad_cfg);
    out << "seed=1\nnot_a_real_key=2\n";
  }
  CHECK(run("mcrlb-sweep --config " + bad_cfg) == 1);
}

TEST_CASE("exit code 2 on runtime failures") {
  CHECK(run("replay --trace /tmp/wetbeam_cli_nonexistent.csv") == 2);
  const std::string empty = "/tmp/wetbeam_cli_empty.csv";
  {
    std::ofstream out(empty);
  }
  CHECK(run("replay --trace " + empty) == 2);
}

TEST_CASE("seeded runs are byte-identical across invocations and workers") {
  const std::string a = "/tmp/wetbeam_cli_a.csv";
  const std::string b = "/tmp/wetbeam_cli_b.csv";
  CHECK(run("rmse-sweep --seed 31415 --trials 200 --workers 1 --out " + a) == 0);
  CHECK(run("rmse-sweep --seed 31415 --trials 200 --workers 3 --out " + b) == 0);
  CHECK(slurp(a) == slurp(b));

  CHECK(run("nstar-cdf --seed 8 --trials 150 --workers 2 --out " + a) == 0);
  CHECK(run("nstar-cdf --seed 8 --trials 150 --workers 4 --out " + b) == 0);
  CHECK(slurp(a) == slurp(b));

  CHECK(run("nstar-cdf --seed 9 --trials 150 --out " + b) == 0);
  CHECK(slurp(a) != slurp(b));
}

TEST_CASE("replay works end to end through the binary") {
  const std::string trace = "/tmp/wetbeam_cli_trace.csv";
  {
    std::ofstream out(trace);
    out << "slot,mini_slot,theta,rssi\n";
    out << "2,1,0,2.5\n";
    out << "2,2,2.0943951023931953,0.75\n";
    out << "2,3,4.1887902047863905,0.75\n";
  }
  const std::string result = "/tmp/wetbeam_cli_replay.csv";
  CHECK(run("replay --trace " + trace + " --out " + result) == 0);
  const std::string text = slurp(result);
  CHECK(text.find("phi_hat_deg") != std::string::npos);
}
