#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "umbra/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = umbra::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("bell") {
  const auto r = run({"bell", "--order", "7"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 1 2 5 15 52 203 877\n");
  const auto j = nlohmann::json::parse(run({"bell", "--order", "3", "--format", "json"}).out);
  CHECK(j["egf"] == nlohmann::json::array({"1", "1", "2", "5"}));
}

TEST_CASE("fmn-table csv") {
  const auto r = run({"fmn-table", "--max-m", "3", "--max-n", "5", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\n1,0,1,4,9,16,25\n") != std::string::npos);
  CHECK(r.out.find("\n0,1/2,3/2,5/2,7/2,9/2,11/2\n") != std::string::npos);
}

TEST_CASE("umbral subcommands") {
  CHECK(run({"umbral-seq", "--B", "exp(t)-1", "--n", "2"}).out == "B_0(x) = 1\nB_1(x) = x\nB_2(x) = x^2 + x\n");
  CHECK(run({"theta", "--B", "exp(t)-1", "--p", "0,0,1"}).out == "x^2 + x\n");
  CHECK(run({"shift", "--B", "exp(t)-1", "--p", "0,1,1"}).out == "x^3 + 3*x^2 + x\n");
  CHECK(run({"shift", "--B", "exp(t)-1", "--m", "1", "--p", "0,1,1"}).out == "4*x\n");
  CHECK(run({"pair", "--A", "exp(t)", "--p", "1,1,1"}).out == "3\n");
  CHECK(run({"pair", "--A", "t^2/2", "--p", "5,0,7"}).out == "7\n");
}

TEST_CASE("verify") {
  const auto r = run({"verify", "--id", "FAA", "--order", "12"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAA: PASS") != std::string::npos);
  const auto a = run({"verify", "--id", "ALL", "--seed", "7", "--order", "6"});
  const auto b = run({"verify", "--id", "ALL", "--seed", "7", "--order", "6"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(run({"--format", "json", "verify", "--id", "BELL"}).out);
  CHECK(j["results"][0]["pass"] == true);
  CHECK(j["total"] == 1);
}

TEST_CASE("exit codes for bad input") {
  CHECK(run({}).code == 2);
  CHECK(run({"nope"}).code == 2);
  CHECK(run({"bell", "--format", "xml"}).code == 2);
  CHECK(run({"verify", "--id", "NOPE"}).code == 2);
  const auto syntax = run({"pair", "--A", "t/(1-t", "--p", "1"});
  CHECK(syntax.code == 2);
  CHECK(syntax.err.find("offset 6") != std::string::npos);
  CHECK(syntax.err.find("expr     :=") != std::string::npos);
  CHECK(run({"pair", "--A", "log(t)", "--p", "1"}).code == 2);
  CHECK(run({"theta", "--B", "t^2", "--p", "1,1"}).code == 2);
  CHECK(run({"pair", "--A", "t", "--p", "1,x"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("output file") {
  const std::string path = "cli_test_output.txt";
  CHECK(run({"bell", "--order", "4", "--output", path}).out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == "1 1 2 5 15\n");
}
