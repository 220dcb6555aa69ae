// Integration tests that drive the installed CLI binary against the
// bundled fixture corpus and check the documented exit-code contract.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include "k3bott/io.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout and stderr combined
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(K3BOTT_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), std::move(out)};
}

std::string fixture(const std::string& name) {
  return std::string(K3BOTT_FIXTURES_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("the fixture corpus reproduces the verdict table in one batch") {
  const std::vector<std::pair<const char*, int>> table = {
      {"rank1_d02.json", 1},  {"rank1_d04.json", 1},  {"rank1_d06.json", 1},
      {"rank1_d08.json", 1},  {"rank1_d10.json", 1},  {"rank1_d12.json", 1},
      {"rank1_d14.json", 1},  {"rank1_d16.json", 1},  {"rank1_d18.json", 1},
      {"rank1_d20.json", 0},  {"rank1_d22.json", 1},  {"rank1_d24.json", 0},
      {"degree72_sextic.json", 1},
      {"rank1_d2_k7.json", 0},
      {"degree62.json", 2},
      {"hyperbolic_u.json", 1},
      {"unigonal_nodal_b40.json", 0},
      {"unigonal_nodal_b38.json", 1},
      {"unigonal_cusp_b40.json", 1},
      {"unigonal_cusp_b100.json", 1},
      {"unigonal_cusp_b400.json", 1},
      {"unigonal_nodata.json", 2},
      {"r2_b92.json", 0},  {"r2_b90.json", 2},
      {"r3_b140.json", 0}, {"r3_b138.json", 2},
      {"r4_b194.json", 0}, {"r4_b192.json", 2},
  };
  for (const auto& [name, expected] : table) {
    CAPTURE(name);
    const auto res = run("analyze " + fixture(name));
    CHECK(res.exit_code == expected);
  }
}

TEST_CASE("json output parses and matches the text verdict") {
  const auto res = run("analyze " + fixture("unigonal_cusp_b40.json") +
                       " --format json");
  CHECK(res.exit_code == 1);
  const auto report = k3bott::parse_report_json(res.output);
  CHECK(report.verdict.status == k3bott::VerdictStatus::Fails);
  CHECK(report.verdict.reasons.front().rule == "unigonal-cusp");
  CHECK(k3bott::render_json(report) == res.output);
}

TEST_CASE("analyze reports reasons and citations in text form") {
  const auto res = run("analyze " + fixture("rank1_d22.json"));
  CHECK(res.exit_code == 1);
  CHECK(res.output.find("rank-one-degree-22") != std::string::npos);

  const auto fano = run("analyze " + fixture("degree62.json"));
  CHECK(fano.exit_code == 2);
  CHECK(fano.output.find("fano-window") != std::string::npos);
  CHECK(fano.output.find("Prokhorov") != std::string::npos);
}

TEST_CASE("input errors exit with 64 and name the field") {
  CHECK(run("analyze /nonexistent.json").exit_code == 64);
  const auto res = run("analyze " + fixture("broken_odd_lattice.json"));
  CHECK(res.exit_code == 64);
  CHECK(res.output.find("gram") != std::string::npos);
}

TEST_CASE("enumerate subcommand") {
  const auto res = run("enumerate " + fixture("hyperbolic_u.json") +
                       " --square 0 --degree-min 1 --degree-max 4");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("total: 6") != std::string::npos);
  CHECK(res.output.find("(2, 0)") != std::string::npos);

  const auto empty = run("enumerate " + fixture("degree62.json") +
                         " --square 0 --degree-min 1 --degree-max 1000");
  CHECK(empty.exit_code == 0);
  CHECK(empty.output.find("total: 0") != std::string::npos);

  const auto minus2 = run("enumerate " + fixture("hyperbolic_u.json") +
                          " --square -2 --degree-min 1 --degree-max 1");
  CHECK(minus2.output.find("(1, -1)") != std::string::npos);
  CHECK(minus2.output.find("total: 1") != std::string::npos);

  // invalid window
  CHECK(run("enumerate " + fixture("hyperbolic_u.json") +
            " --square 0 --degree-min 4 --degree-max 1")
            .exit_code == 64);
}

TEST_CASE("delpezzo subcommand") {
  const auto d5 = run("delpezzo --degree 5");
  CHECK(d5.exit_code == 0);
  CHECK(d5.output.find("10 (-1)-curves") != std::string::npos);
  CHECK(d5.output.find("Petersen: yes") != std::string::npos);
  CHECK(d5.output.find("H - E1 - E2") != std::string::npos);

  const auto d6 = run("delpezzo --degree 6");
  CHECK(d6.exit_code == 0);
  CHECK(d6.output.find("6 (-1)-curves") != std::string::npos);

  CHECK(run("delpezzo --degree 8").exit_code == 64);
  CHECK(run("delpezzo --degree 4").exit_code == 64);
}
