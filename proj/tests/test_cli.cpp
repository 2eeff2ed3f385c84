// End-to-end checks of the command-line tool: spawns the built binary with
// generated config files and inspects outputs and exit codes.
#define DOCTEST_CONFIG_IMPLEMENT
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

namespace {

std::string g_binary;
const char* kDir = "/tmp/lgtt_cli_test";

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

struct RunResult {
  int exit_code;
  std::string out, err;
};

RunResult run(const std::string& args) {
  std::string so = std::string(kDir) + "/stdout.txt";
  std::string se = std::string(kDir) + "/stderr.txt";
  std::string cmd = g_binary + " " + args + " > " + so + " 2> " + se;
  int rc = std::system(cmd.c_str());
  auto slurp = [](const std::string& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  return {WEXITSTATUS(rc), slurp(so), slurp(se)};
}

const char* kCubicConfig = R"({
  "variables": ["z1", "z2", "z3"],
  "polynomial": "z1^3+z2^3+z3^3",
  "deformation": ["z1*z2*z3"],
  "grid": {"center": [0, 0], "radius": 1.0, "count": 12},
  "tolerances": {"series": 1e-10, "verify": 1e-6, "fd_step": 1e-2}
})";

const char* kQuinticConfig = R"({
  "variables": ["z1", "z2", "z3", "z4", "z5"],
  "polynomial": "z1^5+z2^5+z3^5+z4^5+z5^5",
  "deformation": []
})";

}  // namespace

TEST_CASE("analyze: quintic and cubic counts") {
  std::string cfg = std::string(kDir) + "/quintic.json";
  write_file(cfg, kQuinticConfig);
  RunResult r = run("--config " + cfg + " analyze");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["mu"] == 1024);
  CHECK(j["mu_prime"] == 204);
  CHECK(j["s"] == 101);
  CHECK(j["central_charge"] == "3");

  std::string cfg3 = std::string(kDir) + "/cubic.json";
  write_file(cfg3, kCubicConfig);
  RunResult r3 = run("--config " + cfg3 + " analyze");
  REQUIRE(r3.exit_code == 0);
  auto j3 = nlohmann::json::parse(r3.out);
  CHECK(j3["mu"] == 8);
  CHECK(j3["mu_prime"] == 2);
  CHECK(j3["central_charge"] == "1");
  CHECK(j3["basis"].size() == 8);
}

TEST_CASE("malformed polynomial: exit 2 and machine-readable error") {
  std::string cfg = std::string(kDir) + "/bad.json";
  write_file(cfg, R"({"variables":["z1"],"polynomial":"z1^ +"})");
  RunResult r = run("--config " + cfg + " analyze");
  CHECK(r.exit_code == 2);
  auto j = nlohmann::json::parse(r.err);
  CHECK(j["code"] == "parse_error");
  CHECK(j.contains("position"));
}

TEST_CASE("degenerate exact parameter: degeneracy error code") {
  std::string cfg = std::string(kDir) + "/degen.json";
  write_file(cfg, R"({
    "variables": ["z1","z2","z3"],
    "polynomial": "z1^3+z2^3+z3^3",
    "deformation": ["z1*z2*z3"],
    "u": [{"re": "-3", "im": "0"}]
  })");
  RunResult r = run("--config " + cfg + " basis");
  CHECK(r.exit_code == 2);
  auto j = nlohmann::json::parse(r.err);
  CHECK(j["code"] == "degenerate_potential");
}

TEST_CASE("pf: order two with the cube-root singular locus") {
  std::string cfg = std::string(kDir) + "/cubic.json";
  write_file(cfg, kCubicConfig);
  RunResult r = run("--config " + cfg + " pf");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["order"] == 2);
  CHECK(j["singular_points"]["leading_coefficient"] == "u^3 + 27");
  CHECK(j["singular_points"]["infinity"] == true);
  REQUIRE(j["singular_points"]["roots"].size() == 3);
  for (auto& root : j["singular_points"]["roots"]) {
    double re = root["re"], im = root["im"];
    std::complex<double> u(re, im), u3 = u * u * u;
    CHECK(std::abs(u3 + 27.0) < 1e-8);
  }
}

TEST_CASE("periods: csv schema and row count") {
  std::string cfg = std::string(kDir) + "/cubic.json";
  write_file(cfg, kCubicConfig);
  RunResult r = run("--config " + cfg + " --format csv --grid-count 3 periods");
  REQUIRE(r.exit_code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "u_re,u_im,side,thimble,basis_index,value_re,value_im,method,tol");
  int rows = 0;
  while (std::getline(in, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 3 * 2 * 8 * 8);  // points x sides x thimbles x basis columns
}

TEST_CASE("deterministic byte-for-byte output") {
  std::string cfg = std::string(kDir) + "/cubic.json";
  write_file(cfg, kCubicConfig);
  RunResult a = run("--config " + cfg + " --format csv --grid-count 2 periods");
  RunResult b = run("--config " + cfg + " --format csv --grid-count 2 periods");
  CHECK(a.out == b.out);
}

TEST_CASE("verify: quintic algebraic subset passes") {
  std::string cfg = std::string(kDir) + "/quintic_def.json";
  nlohmann::json j = nlohmann::json::parse(kQuinticConfig);
  // all 101 marginal directions, exercised through the C-matrix checks
  RunResult probe = run("--config " + std::string(kDir) + "/quintic.json analyze");
  auto marginals = nlohmann::json::parse(probe.out)["marginals"];
  j["deformation"] = marginals;
  write_file(cfg, j.dump());
  RunResult r = run("--config " + cfg + " verify");
  REQUIRE(r.exit_code == 0);
  auto out = nlohmann::json::parse(r.out);
  CHECK(out["pass"] == true);
  bool saw_commutators = false;
  for (auto& c : out["checks"])
    if (c["check"] == "c_commutators") saw_commutators = c["pass"] == true;
  CHECK(saw_commutators);
}

TEST_CASE("verify: hesse full suite passes, negative control fails") {
  std::string cfg = std::string(kDir) + "/cubic.json";
  write_file(cfg, kCubicConfig);
  RunResult r = run("--config " + cfg + " verify");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["pass"] == true);
  for (auto& c : j["checks"]) CHECK(c["pass"] == true);

  RunResult bad = run("--config " + cfg + " --debug-perturb-constant 0.01 verify");
  CHECK(bad.exit_code == 1);
  auto jb = nlohmann::json::parse(bad.out);
  CHECK(jb["pass"] == false);
}

TEST_CASE("wp: csv output on a small grid") {
  std::string cfg = std::string(kDir) + "/cubic.json";
  write_file(cfg, kCubicConfig);
  RunResult r = run("--config " + cfg + " --format csv --grid-count 3 --grid-radius 0.4 wp");
  REQUIRE(r.exit_code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "u_re,u_im,h00,G_lg,G_cy,rel_diff,richardson_drift");
  int rows = 0;
  while (std::getline(in, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 9);
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: test_cli <path-to-lgtt-binary>\n");
    return 2;
  }
  g_binary = argv[1];
  std::system((std::string("mkdir -p ") + kDir).c_str());
  doctest::Context ctx;
  ctx.applyCommandLine(1, argv);
  return ctx.run();
}
