#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "cpgb/cli.hpp"

using namespace cpgb;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "cpgb");
  std::ostringstream out, err;
  int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("identities") {
  auto r = run({"identities", "--pattern", "o"});
  CHECK(r.status == kExitOk);
  CHECK(r.out == "2*l*y - 2*l*x - x + 1\n");
  auto all = run({"identities", "--order", "3"});
  CHECK(all.status == kExitOk);
  CHECK(all.out.find("l*u + l*z - 2*l*w - w + x") != std::string::npos);
  CHECK(run({"identities", "--pattern", "q"}).status == kExitUsage);
  CHECK(run({"identities", "--order", "5"}).status == kExitUsage);
}

TEST_CASE("groebner prints one element per line") {
  auto r = run({"groebner", "--order", "2prime"});
  CHECK(r.status == kExitOk);
  CHECK(r.out == "x - 1\ny - 1\nz - 1\n");
  auto traced = run({"groebner", "--order", "1", "--trace"});
  CHECK(traced.status == kExitOk);
  CHECK_FALSE(traced.err.empty());
}

TEST_CASE("approx") {
  auto text = run({"approx", "--order", "3"});
  CHECK(text.status == kExitOk);
  CHECK(text.out.find("(1 + sqrt(37))/6") != std::string::npos);
  auto j = json_of(run({"approx", "--order", "2", "--out", "json"}));
  CHECK(j["lambda_c"]["exact"] == "1");
  CHECK(j["nontrivial"] == "2*l*x - x - 1");
  CHECK(j["branch"] == "x = 1/(2*l - 1)");
  CHECK(j["manifest"]["tool_version"] == kToolVersion);

  auto degenerate = run({"approx", "--order", "2prime"});
  CHECK(degenerate.status == kExitDegenerate);
  auto dj = json_of(run({"approx", "--order", "2prime", "--out", "json"}));
  CHECK(dj["degenerate"] == true);
}

TEST_CASE("custom systems") {
  auto r = run({"approx", "--patterns", "o,oo", "--scheme", "custom", "--relation", "o*ooo=oo*oo", "--out", "json"});
  CHECK(r.status == kExitOk);
  CHECK(json_of(r)["lambda_c"]["exact"] == "1");
  CHECK(run({"ideal", "--scheme", "custom", "--relation", "o*=oo"}).status == kExitUsage);
}

TEST_CASE("sweep") {
  auto csv = run({"sweep", "--order", "1", "--from", "0.25", "--to", "1", "--step", "0.25", "--out", "csv"});
  CHECK(csv.status == kExitOk);
  std::istringstream lines(csv.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line.rfind("# {", 0) == 0);
  std::getline(lines, line);
  CHECK(line == "lambda,rho");
  std::vector<std::string> rows;
  while (std::getline(lines, line)) rows.push_back(line);
  CHECK(rows == std::vector<std::string>{"0.25,0", "0.5,0", "0.75,0.333333333333", "1,0.5"});
  CHECK(run({"sweep", "--order", "1", "--from", "2", "--to", "1", "--step", "0.1"}).status == kExitUsage);
  CHECK(run({"sweep", "--order", "1", "--from", "1", "--to", "2", "--step", "0"}).status == kExitUsage);
}

TEST_CASE("simulate") {
  auto r = run({"simulate", "--lambda", "0", "--L", "40", "--T", "20", "--replicas", "20", "--seed", "3"});
  REQUIRE(r.status == kExitOk);
  auto j = json_of(r);
  CHECK(j["mode"] == "extinction");
  CHECK(j["mean"] == 1.0);
  CHECK(j["params"]["seed"] == 3);
  CHECK(j["rng"] == "mt19937_64/splitmix64-v1");

  auto again = json_of(run({"simulate", "--lambda", "0", "--L", "40", "--T", "20", "--replicas", "20", "--seed", "3"}));
  CHECK(again["mean"] == j["mean"]);
  CHECK(again["elapsed_sim_time"] == j["elapsed_sim_time"]);

  CHECK(run({"simulate"}).status == kExitUsage);
  CHECK(run({"simulate", "--lambda", "1", "--L", "2"}).status == kExitUsage);
  CHECK(run({"simulate", "--lambda", "1", "--mode", "bogus"}).status == kExitUsage);
}

TEST_CASE("compare") {
  auto r = run({"compare", "--order", "1", "--lambda", "0.3", "--L", "40", "--T", "30", "--replicas", "40"});
  REQUIRE(r.status == kExitOk);
  auto j = json_of(r);
  CHECK(j["rho_approx"] == 0.0);
  CHECK(j["extinction_sim"].get<double>() >= 0.9);
  CHECK(run({"compare", "--order", "3"}).status == kExitUsage);
}

TEST_CASE("help and unknown commands") {
  CHECK(run({"--help"}).status == kExitOk);
  CHECK(run({"frobnicate"}).status == kExitUsage);
  CHECK(run({}).status == kExitUsage);
}
