#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "seshadri/report.hpp"

namespace {

std::string cli_path() {
  const char* p = std::getenv("SESHADRI_CLI");
  REQUIRE_MESSAGE(p != nullptr, "SESHADRI_CLI must point at the built binary");
  return p;
}

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  RunResult res;
  std::string cmd = cli_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    res.output.append(buf.data(), n);
  }
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

}  // namespace

TEST_CASE("bound subcommand exit codes") {
  CHECK(run("bound class=gt l2=1 r=1 pg=2").exit_code == 0);
  CHECK(run("bound class=p2").exit_code == 0);
  CHECK(run("bound class=gt l2=1 r=2").exit_code == 2);   // parity violation
  CHECK(run("bound class=gt l2=1").exit_code == 1);       // missing r
  CHECK(run("bound class=nope l2=1 r=1").exit_code == 1);
  CHECK(run("nonsense").exit_code == 1);
}

TEST_CASE("bound report content") {
  RunResult res = run("bound class=gt l2=1 r=1 pg=2 --format json");
  REQUIRE(res.exit_code == 0);
  auto doc = seshadri::parse_json(res.output);
  CHECK(doc.command == "bound");
  CHECK(doc.status == "ok");
  bool top_is_half = false;
  for (const auto& row : doc.certificates) {
    if (row.rank == 1 && row.scope == "all-points") {
      CHECK(row.value.symbolic == "1/2");
      top_is_half = true;
      break;
    }
  }
  CHECK(top_is_half);
}

TEST_CASE("audit csv header and failure set") {
  RunResult res = run("audit --k2-max 10 --format csv");
  REQUIRE(res.exit_code == 0);
  CHECK(res.output.rfind("chain,k2,r,l2,lhs,rhs,verdict\n", 0) == 0);
  for (int k2 = 1; k2 <= 4; ++k2) {
    std::string row = "A," + std::to_string(k2) + ",,,";
    auto pos = res.output.find(row);
    REQUIRE(pos != std::string::npos);
    CHECK(res.output.find("Fails", pos) < res.output.find("\n", pos));
  }
}

TEST_CASE("wps and example subcommands") {
  RunResult res = run("wps 1,1,2,5 10 --format json");
  REQUIRE(res.exit_code == 0);
  auto doc = seshadri::parse_json(res.output);
  REQUIRE(doc.wps.has_value());
  CHECK(doc.wps->k2.symbolic == "1");
  CHECK(doc.wps->pg == "2");
  CHECK(doc.wps->picard_rank_one);

  CHECK(run("wps 1,1,2,4 10").exit_code == 0);
  CHECK(run("wps 1,1,2 10").exit_code == 1);
  CHECK(run("wps 1,1,2,0 10").exit_code == 1);

  RunResult ex = run("example --format json");
  REQUIRE(ex.exit_code == 0);
  auto exdoc = seshadri::parse_json(ex.output);
  REQUIRE(exdoc.example.has_value());
  CHECK(exdoc.example->bound.symbolic == "1/2");
  CHECK(exdoc.example->sharp);
}

TEST_CASE("output is deterministic") {
  std::string a = run("bound class=gt l2=2 r=1 --format json").output;
  std::string b = run("bound class=gt l2=2 r=1 --format json").output;
  CHECK(a == b);
  CHECK(!a.empty());
}

TEST_CASE("p_max precedence: flag beats environment beats default") {
  auto echo_pmax = [](const std::string& prefix, const std::string& args) {
    std::string cmd = prefix + args + " --format json";
    RunResult res = run(cmd);
    REQUIRE(res.exit_code == 0);
    auto doc = seshadri::parse_json(res.output);
    for (const auto& [k, v] : doc.input) {
      if (k == "p_max") return v;
    }
    return std::string();
  };
  CHECK(echo_pmax("", "bound class=gt l2=1 r=1") == "100");
  // environment variable overrides the default
  setenv("SESHADRI_PMAX", "7", 1);
  CHECK(echo_pmax("", "bound class=gt l2=1 r=1") == "7");
  CHECK(echo_pmax("", "bound class=gt l2=1 r=1 --p-max 23") == "23");
  unsetenv("SESHADRI_PMAX");
}
