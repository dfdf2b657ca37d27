#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "topvert/cli.hpp"

using namespace topvert;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("exponent parsing") {
  CHECK(parse_exponent("3") == HalfExp::from_int(3));
  CHECK(parse_exponent("-7/2") == HalfExp::from_twice(-7));
  CHECK(parse_exponent("2.5") == HalfExp::from_twice(5));
  CHECK(parse_exponent("-0.5") == HalfExp::from_twice(-1));
  CHECK_THROWS_AS(parse_exponent("1/3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_exponent("0.25"), std::invalid_argument);
  CHECK_THROWS_AS(parse_exponent("x"), std::invalid_argument);
}

TEST_CASE("vertex both methods") {
  const Run r = run({"vertex", "--legs", "-;-;-", "--method", "both", "--pmax", "6"});
  CHECK(r.code == 0);
  const std::string line = "q^0: +1*p^0 +1*p^1 +3*p^2 +6*p^3 +13*p^4 +24*p^5 +48*p^6";
  const auto first = r.out.find(line);
  REQUIRE(first != std::string::npos);
  CHECK(r.out.find(line, first + 1) != std::string::npos);
}

TEST_CASE("enumerate minimal configuration") {
  const Run r = run({"enumerate3d", "--legs", "1;1;1", "--budget", "0"});
  CHECK(r.code == 0);
  CHECK(r.out.find("{-2: 1}") != std::string::npos);
  const Run j = run({"--format", "json", "enumerate3d", "--legs", "1;1;1", "--budget", "0"});
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["counts"] == nlohmann::json::array({nlohmann::json::array({-2, "1"})}));
}

TEST_CASE("identity report in json") {
  const Run r = run({"--format", "json", "identity", "--id", "3", "--qmax", "5", "--pmin", "-6", "--pmax", "6"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["status"] == "PASS");
  CHECK(doc["check"] == "identity");
  CHECK(doc["params"]["pmin"] == "-6");
  CHECK(doc["params"]["qorder"] == "5");
  CHECK(doc["mismatches"].empty());
  CHECK(doc.contains("version"));
}

TEST_CASE("reports do not depend on the job count") {
  const std::vector<std::vector<std::string>> commands{
      {"identity", "--id", "5", "--qmax", "2", "--pmin", "-4", "--pmax", "4"},
      {"fock", "--check", "lemma52", "--qmax", "2", "--awin", "2", "--pmin", "-4", "--pmax", "4"},
      {"vertex", "--legs", "1;1;-", "--method", "both", "--pmax", "3"},
  };
  for (const auto& c : commands) {
    std::vector<std::string> one{"--format", "json", "--jobs", "1"}, eight{"--format", "json", "--jobs", "8"};
    one.insert(one.end(), c.begin(), c.end());
    eight.insert(eight.end(), c.begin(), c.end());
    const Run a = run(one), b = run(eight);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("other subcommands pass") {
  CHECK(run({"bo", "--point", "one", "--qmax", "3", "--pmin", "-5", "--pmax", "5"}).code == 0);
  CHECK(run({"bo", "--point", "two", "--qmax", "3", "--pmin", "-5", "--pmax", "5"}).code == 0);
  CHECK(run({"dt", "--case", "BpF", "--genus", "1", "--qmax", "2", "--pmin", "-4", "--pmax", "4", "--check-quotients"})
            .code == 0);
  CHECK(run({"dt", "--case", "F", "--qmax", "2", "--pmin", "-2", "--pmax", "2"}).code == 0);
  CHECK(run({"fock", "--check", "matrix-coeff", "--emax", "3"}).code == 0);
  CHECK(run({"fock", "--check", "commutation", "--emax", "2", "--awin", "2", "--pmin", "-3", "--pmax", "3"}).code == 0);
  CHECK(run({"fock", "--check", "traces", "--qmax", "2", "--pmin", "-3", "--pmax", "3"}).code == 0);
  CHECK(run({"fock", "--check", "lemma51", "--qmax", "2", "--awin", "1", "--pmin", "-3", "--pmax", "3"}).code == 0);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"identity", "--id", "7", "--qmax", "2", "--pmin", "0", "--pmax", "2"}).code == 2);
  CHECK(run({"identity", "--id", "3", "--qmax", "2", "--pmin", "0"}).code == 2);
  CHECK(run({"identity", "--id", "3", "--qmax", "2", "--pmin", "4", "--pmax", "2"}).code == 2);
  CHECK(run({"vertex", "--legs", "2,3;-;-", "--pmax", "2"}).code == 2);
  CHECK(run({"vertex", "--legs", "1;1", "--pmax", "2"}).code == 2);
  CHECK(run({"dt", "--case", "BF", "--qmax", "2", "--pmin", "0", "--pmax", "2"}).code == 2);
  CHECK(run({"dt", "--case", "F", "--genus", "1", "--qmax", "2", "--pmin", "0", "--pmax", "2"}).code == 2);
  const Run r = run({"fock", "--check", "lemma52", "--qmax", "2", "--pmin", "0", "--pmax", "2"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--awin") != std::string::npos);
}

TEST_CASE("report written to a file") {
  const std::string path = "cli_test_report.json";
  const Run r = run({"--format", "json", "--out", path, "dt", "--case", "N", "--qmax", "1", "--pmin", "0", "--pmax", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  const auto doc = nlohmann::json::parse(in);
  CHECK(doc["check"] == "dt");
  CHECK(doc["series"]["qorder"] == 1);
  std::remove(path.c_str());
}
