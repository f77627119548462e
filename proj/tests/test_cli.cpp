#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "support.hpp"

using namespace singcat;
using namespace singcat::test;

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(SINGCAT_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return RunResult{WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("exit status 0: successful computation") {
  auto res = run("loewy \"QQ[x,y]/(x^4 - y^5)\"");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("6") != std::string::npos);
}

TEST_CASE("exit status 1: hypothesis failure") {
  auto res = run("mult \"QQ[x,y]/(x^4 - y^5)\" --reduction x^3");  // missing --assume-cm
  CHECK(res.exit_code == 1);
  auto res2 = run("regular-seq \"x, x\" \"QQ[x,y]/(x^4 - y^5)\"");
  CHECK(res2.exit_code == 1);
}

TEST_CASE("exit status 2: parse and usage errors") {
  CHECK(run("bounds \"QQ[x,y]/(x^3 -\"").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("bounds \"QQ[x,y]/(x^3 - q)\"").exit_code == 2);
  CHECK(run("bounds \"F4[x]/(x^2)\"").exit_code == 2);
}

TEST_CASE("exit status 3: resource cap") {
  auto res = run("alpha z \"QQ[x,y,z,w]/(x^3 + y^3 + x*y*z + w^2)\" --cap 4");
  CHECK(res.exit_code == 3);
  CHECK(res.output.find("NOT_FOUND") != std::string::npos);
}

TEST_CASE("structured output is deterministic") {
  std::string cmd = "--format json bounds \"QQ[x,y]/(x^4 - y^5)\"";
  auto a = run(cmd);
  auto b = run(cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
}

TEST_CASE("structured report re-parses and printed polynomials round-trip") {
  auto res = run("--format json jacobian \"QQ[x,y,z,w]/(x^3 + y^3 + x*y*z + w^2)\"");
  REQUIRE(res.exit_code == 0);
  auto j = nlohmann::ordered_json::parse(res.output);
  CHECK(j["tool"] == "singcat");
  auto parsed = parse_ring_spec(j["ring"].get<std::string>());
  Ideal expected(parsed.ambient, parsed.relations);
  for (const auto& g : j["generators"]) {
    Polynomial p = parse_polynomial(g.get<std::string>(), parsed.ambient);
    CHECK(parse_polynomial(p.str(), parsed.ambient) == p);
  }
}

TEST_CASE("structured and human renderings agree on values") {
  auto human = run("bounds \"QQ[x,y]/(x^4 - y^5)\"");
  auto machine = run("--format json bounds \"QQ[x,y]/(x^4 - y^5)\"");
  REQUIRE(machine.exit_code == 0);
  auto j = nlohmann::ordered_json::parse(machine.output);
  CHECK(j["report"]["best"]["value"] == 2);
  CHECK(human.output.find("best bound: 2") != std::string::npos);
  for (const auto& b : j["report"]["bounds"]) {
    std::string line = b["name"].get<std::string>() + " = " + std::to_string(b["value"].get<long long>());
    CHECK(human.output.find(line) != std::string::npos);
  }
}

TEST_CASE("mf subcommands run against the sample file") {
  std::string file = std::string(SINGCAT_DATA) + "/a2.mf";
  CHECK(run("mf validate --file " + file).exit_code == 0);
  auto split = run("mf koszul-split --file " + file + " --x x");
  CHECK(split.exit_code == 0);
  auto prop5 = run("mf prop5 --file " + file + " --x x --y x");
  CHECK(prop5.exit_code == 0);
  auto binom = run("--format json mf binomial --file " + file + " --elts \"x, x\"");
  CHECK(binom.exit_code == 0);
  auto j = nlohmann::ordered_json::parse(binom.output);
  CHECK(j["multiplicities"] == nlohmann::ordered_json::array({1, 2, 1}));
  CHECK(run("mf ann --file " + file + " --degree-cap 2").exit_code == 0);
  CHECK(run("mf validate --file /nonexistent.mf").exit_code == 2);
}

TEST_CASE("verify all passes") {
  auto res = run("verify all");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("[FAIL]") == std::string::npos);
  CHECK(res.output.find("all checks passed") != std::string::npos);
}

TEST_CASE("environment variable selects the default format") {
  std::string cmd = std::string("SINGCAT_FORMAT=json ") + SINGCAT_BIN +
                    " loewy \"QQ[x,y]/(x^4 - y^5)\" 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  pclose(pipe);
  CHECK(out.find("\"loewy_length\": 6") != std::string::npos);
}
