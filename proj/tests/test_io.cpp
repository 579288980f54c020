#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"

#include <string>

using namespace testsupport;
using locprog::Error;
namespace io = locprog::io;

namespace {

std::string message_of(const std::string& text) {
  try {
    io::parse_problem(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

Error::Kind kind_of(const std::string& text) {
  try {
    io::parse_problem(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return Error::Kind::domain;
}

const char* kR3 = R"({
  "kind": "vector_problem",
  "space": {"dim": 3},
  "h": {"type": "linear", "A": [[1, 0, 0], [0, 1, 0]]},
  "g": {"type": "linear", "A": [[0, 0, 1]]},
  "C": {"kind": "zero", "dim": 1},
  "K": KCONE,
  "x0": [0, 0, 0],
  "eps": 1
})";

std::string r3_with_cone(const std::string& cone) {
  std::string s = kR3;
  s.replace(s.find("KCONE"), 5, cone);
  return s;
}

}  // namespace

TEST_CASE("R3 fixture round trip") {
  const auto f = load("r3_benchmark.json");
  REQUIRE(f.kind == io::ProblemFile::Kind::vector_problem);
  REQUIRE(f.problem);
  CHECK(f.problem->domain_dim() == 3);
  CHECK(f.problem->objective_dim() == 2);
  CHECK(f.problem->constraint_dim() == 1);
  CHECK(f.eps == std::vector<double>{0.01, 0.1, 1});
  REQUIRE(f.weights.size() == 1);
  CHECK(f.weights[0].isApprox(vec({0.5, 0.5})));
}

TEST_CASE("every shipped valid fixture loads") {
  for (const char* name : {"halfspace.json", "nonconvex.json", "polar_map.json", "economy_linear.json",
                           "economy_linear_disposal.json", "economy_quadratic.json", "economy_quadratic_disposal.json",
                           "economy_satiation.json", "economy_certified.json", "economy_planted.json",
                           "r3_certified.json", "r3_bad_certificate.json"}) {
    CAPTURE(name);
    CHECK_NOTHROW(load(name));
  }
  const auto e = load("economy_certified.json");
  REQUIRE(e.equilibrium);
  CHECK(e.equilibrium->price.isApprox(vec({1.5, 1.5})));
  CHECK(e.x0.size() == 4);
  CHECK(load("polar_map.json").eps_max == 3.0);
}

TEST_CASE("invariant violations name the invariant") {
  CHECK_THROWS_WITH_AS(load("invalid_pnorm.json"), "p must lie in (1,2)", Error);
  try {
    load("invalid_one_good.json");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == Error::Kind::validation);
    CHECK(std::string(e.what()).find("regularity dimension count") != std::string::npos);
    CHECK(std::string(e.what()).find("2 < n+m = 3") != std::string::npos);
  }
  CHECK(message_of(r3_with_cone(R"({"kind": "polyhedral", "generators": [[1, 0], [-1, 0]]})")).find("K not pointed") !=
        std::string::npos);
  CHECK_NOTHROW(io::parse_problem(r3_with_cone(R"({"kind": "nonneg_orthant", "dim": 2})")));
}

TEST_CASE("syntax errors carry line and column") {
  const std::string bad = "{\n  \"kind\": \"map\",\n  \"space\": {\"dim\": 2,}\n}";
  CHECK(kind_of(bad) == Error::Kind::parse);
  CHECK(message_of(bad).rfind("line 3, column", 0) == 0);
}

TEST_CASE("comments are allowed, unknown keys and maps are not") {
  std::string commented = "// leading comment\n" + r3_with_cone(R"({"kind": "nonneg_orthant", "dim": 2})");
  CHECK_NOTHROW(io::parse_problem(commented));
  std::string extra = r3_with_cone(R"({"kind": "nonneg_orthant", "dim": 2, "colour": 1})");
  CHECK(kind_of(extra) == Error::Kind::validation);
  CHECK(message_of(extra).find("colour") != std::string::npos);
  std::string unknown = kR3;
  unknown.replace(unknown.find("\"linear\""), 8, "\"sinh\"");
  unknown.replace(unknown.find("KCONE"), 5, R"({"kind": "nonneg_orthant", "dim": 2})");
  CHECK(message_of(unknown).find("not in the catalog") != std::string::npos);
}

TEST_CASE("inconsistent problems are validation errors") {
  std::string infeasible = r3_with_cone(R"({"kind": "nonneg_orthant", "dim": 2})");
  infeasible.replace(infeasible.find("[0, 0, 0]"), 9, "[0, 0, 1]");
  CHECK(message_of(infeasible).find("not feasible") != std::string::npos);
  std::string wrong_k = r3_with_cone(R"({"kind": "nonneg_orthant", "dim": 3})");
  CHECK(kind_of(wrong_k) == Error::Kind::validation);
  std::string negative_eps = r3_with_cone(R"({"kind": "nonneg_orthant", "dim": 2})");
  negative_eps.replace(negative_eps.find("\"eps\": 1"), 8, "\"eps\": -1");
  CHECK(kind_of(negative_eps) == Error::Kind::validation);
  CHECK(kind_of("[1, 2]") == Error::Kind::validation);
}
