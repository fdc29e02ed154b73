#include <doctest.h>

#include <json.hpp>

#include <sstream>

#include "mvop/cli.hpp"

using namespace mvop;

namespace {

struct RunResult {
  int code;
  std::string out, err;
};

RunResult run(std::initializer_list<std::string> args) {
  std::ostringstream out, err;
  int code = cli_run(std::vector<std::string>(args), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("weights verify-ode and conjugate verify") {
  auto r = run({"one-step", "--alpha", "3", "--beta", "5", "--k", "2", "--no-timing", "weights",
                "verify-ode"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["checks"][0]["status"] == "pass");

  auto c = run({"two-step", "--alpha", "2", "--beta", "6", "--k1", "2", "--k2", "4",
                "--no-timing", "conjugate", "verify"});
  CHECK(c.code == 0);
}

TEST_CASE("dims table output") {
  auto r = run({"one-step", "--alpha", "3", "--beta", "5", "--k", "2", "--no-timing", "algebra",
                "dims", "--max-order", "4"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  std::vector<int> dims = j["data"]["new_operators_by_order"].get<std::vector<int>>();
  CHECK(dims == std::vector<int>{1, 0, 2, 0, 3});
}

TEST_CASE("invalid parameters exit with code 2") {
  auto r = run({"one-step", "--alpha", "3", "--beta", "5", "--k", "9", "polys", "--n", "3"});
  CHECK(r.code == 2);
  auto bad = run({"one-step", "--alpha", "1.5", "--beta", "5", "--k", "2", "polys", "--n", "3"});
  CHECK(bad.code == 2);
}

TEST_CASE("a failing check exits with code 1 and carries a witness") {
  // the order-four generators are not symmetric for the conjugated weight
  auto r = run({"two-step", "--alpha", "2", "--beta", "6", "--k1", "2", "--k2", "4",
                "--no-timing", "check", "symmetry", "--op", "e", "--degree", "4"});
  CHECK(r.code == 1);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["checks"][0]["status"] == "fail");
  CHECK(j["checks"][0].contains("witness"));
}

TEST_CASE("usage errors exit with code 3") {
  auto r = run({"one-step", "--alpha", "3", "polys"});
  CHECK(r.code == 3);
  auto unknown = run({"three-step"});
  CHECK(unknown.code == 3);
}

TEST_CASE("reports are deterministic without timing") {
  auto a = run({"one-step", "--alpha", "3", "--beta", "5", "--k", "2", "--no-timing", "check",
                "eigen", "--n", "3"});
  auto b = run({"one-step", "--alpha", "3", "--beta", "5", "--k", "2", "--no-timing", "check",
                "eigen", "--n", "3"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("rationals render exactly in reports") {
  auto r = run({"one-step", "--alpha", "7/2", "--beta", "11/2", "--k", "2", "--no-timing",
                "polys", "--n", "1"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["params"]["alpha"] == "7/2");
  // matrix entries are strings of the form p/q
  CHECK(j["data"]["polynomials"][0][0][0][0].is_string());
}

TEST_CASE("orthogonality and series commands") {
  auto r = run({"one-step", "--alpha", "3", "--beta", "5", "--k", "2", "--no-timing", "check",
                "orthogonality", "--n", "3"});
  CHECK(r.code == 0);
  auto h = run({"one-step", "--alpha", "3", "--beta", "5", "--k", "2", "--no-timing",
                "hypergeom", "verify", "--n", "2"});
  CHECK(h.code == 0);
  auto j = nlohmann::json::parse(h.out);
  CHECK(j["checks"].size() == 6);  // match + truncate per degree
}

TEST_CASE("csv and markdown formats") {
  auto c = run({"one-step", "--alpha", "3", "--beta", "5", "--k", "2", "--no-timing", "--format",
                "csv", "weights", "verify-ode"});
  CHECK(c.code == 0);
  CHECK(c.out.find("name,status") == 0);
  auto m = run({"one-step", "--alpha", "3", "--beta", "5", "--k", "2", "--no-timing", "--format",
                "md", "weights", "verify-ode"});
  CHECK(m.code == 0);
  CHECK(m.out.find("| check | status |") != std::string::npos);
}
