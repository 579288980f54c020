#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "locprog/locprog.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

std::string fixture(const std::string& name) { return std::string(LOCPROG_FIXTURE_DIR) + "/" + name; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Run {
  int exit_code = -1;
  std::string json;
  std::string table;
};

Run run(const char* command, const std::string& file, const lp_config* cfg = nullptr) {
  lp_config defaults;
  lp_config_init(&defaults);
  lp_report* r = nullptr;
  REQUIRE(lp_run_file(command, fixture(file).c_str(), cfg ? cfg : &defaults, &r) == LP_OK);
  Run out{lp_report_exit_code(r), lp_report_json(r), lp_report_table(r)};
  lp_report_free(r);
  return out;
}

int cli(const std::string& args) {
  const int status = std::system((std::string(LOCPROG_CLI) + " " + args + " > /dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / ("locprog_capi_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("config defaults") {
  lp_config c;
  lp_config_init(&c);
  CHECK(c.seed == 0);
  CHECK(c.tol_feasibility == 1e-8);
  CHECK(c.tol_optimality == 1e-6);
  CHECK(c.tol_boundary_rel == 1e-5);
  CHECK(c.certificate_samples == 10000);
  CHECK(c.eps_count == 0);
  CHECK(std::string(lp_version()).size() > 0);
}

TEST_CASE("modulus through the C interface") {
  double d = 0;
  REQUIRE(lp_modulus_of_convexity(3, 0.0, 1.0, &d) == LP_OK);
  CHECK(std::abs(d - (1.0 - std::sqrt(0.75))) < 1e-15);
  double k = 0;
  REQUIRE(lp_quadratic_growth_constant(2, 1.5, &k) == LP_OK);
  CHECK(k == 0.0625);
  CHECK(lp_quadratic_growth_constant(2, 2.5, &k) == LP_ERR_VALIDATION);
  CHECK(std::string(lp_last_error()) == "p must lie in (1,2)");
  CHECK(lp_modulus_of_convexity(2, 0.0, 1.0, nullptr) == LP_ERR_INVALID_ARGUMENT);
}

TEST_CASE("problem handles") {
  lp_problem* p = nullptr;
  REQUIRE(lp_problem_load(fixture("economy_linear.json").c_str(), &p) == LP_OK);
  CHECK(lp_problem_kind_of(p) == LP_KIND_ECONOMY);
  lp_report* r = nullptr;
  REQUIRE(lp_run("economy-regularity", p, nullptr, &r) == LP_OK);
  CHECK(lp_report_exit_code(r) == 0);
  const std::string via_handle = lp_report_json(r);
  lp_report_free(r);
  CHECK(via_handle == run("economy-regularity", "economy_linear.json").json);
  CHECK(lp_run("no-such-command", p, nullptr, &r) == LP_ERR_INVALID_ARGUMENT);
  lp_problem_free(p);

  CHECK(lp_problem_load(fixture("missing.json").c_str(), &p) == LP_ERR_IO);
  CHECK(p == nullptr);
  CHECK(lp_problem_load(fixture("invalid_pnorm.json").c_str(), &p) == LP_ERR_VALIDATION);
  const char* broken = "{\"kind\": ";
  CHECK(lp_problem_parse(broken, std::char_traits<char>::length(broken), &p) == LP_ERR_PARSE);
  CHECK(std::string(lp_last_error()).rfind("line 1", 0) == 0);
}

TEST_CASE("reports carry the digest, the config and the status") {
  const auto r = run("localize", "r3_benchmark.json");
  CHECK(r.exit_code == 0);
  CHECK(r.json.find("\"inputs_digest\": \"sha256:") != std::string::npos);
  CHECK(r.json.find("\"status\": \"pass\"") != std::string::npos);
  CHECK(r.json.find("\"boundary_rel\": 1e-05") != std::string::npos);
  CHECK(r.json.find("threads") == std::string::npos);
  CHECK(r.table.empty());
}

TEST_CASE("exit codes") {
  CHECK(run("certify", "r3_certified.json").exit_code == 0);
  const auto bad = run("certify", "r3_bad_certificate.json");
  CHECK(bad.exit_code == 1);
  CHECK(bad.json.find("\"failed_checks\"") != std::string::npos);
  CHECK(bad.json.find("\"lagrangian_max\"") != std::string::npos);

  const auto planted = run("economy-verify", "economy_planted.json");
  CHECK(planted.exit_code == 1);
  CHECK(planted.json.find("individual_optimality[1]") != std::string::npos);
  CHECK(run("economy-verify", "economy_certified.json").exit_code == 0);

  CHECK(run("localize", "invalid_pnorm.json").exit_code == 2);
  CHECK(run("localize", "invalid_one_good.json").exit_code == 2);
  CHECK(run("localize", "missing.json").exit_code == 2);
  CHECK(run("localize", "economy_linear.json").exit_code == 2);
  CHECK(run("economy-regularity", "r3_benchmark.json").exit_code == 2);
  CHECK(run("certify", "r3_benchmark.json").exit_code == 2);
}

TEST_CASE("eps override") {
  lp_config c;
  lp_config_init(&c);
  const double radii[] = {0.3};
  c.eps = radii;
  c.eps_count = 1;
  const auto r = run("localize", "r3_benchmark.json", &c);
  CHECK(r.exit_code == 0);
  CHECK(r.json.find("\"eps\": 0.3") != std::string::npos);
  CHECK(r.json.find("\"eps\": 0.01") == std::string::npos);
  const double bad[] = {-1.0};
  c.eps = bad;
  CHECK(run("localize", "r3_benchmark.json", &c).exit_code == 2);
}

TEST_CASE("sweep writes an atomic report and a table") {
  lp_config c;
  lp_config_init(&c);
  c.weights_grid = 4;
  lp_report* r = nullptr;
  REQUIRE(lp_run_file("pareto-sweep", fixture("r3_benchmark.json").c_str(), &c, &r) == LP_OK);
  const fs::path out = scratch() / "sweep.json";
  REQUIRE(lp_report_write(r, out.string().c_str()) == LP_OK);
  CHECK(slurp(out) == lp_report_json(r));
  const std::string table = slurp(out.string() + ".tsv");
  CHECK(table.rfind("eps\tw1\tw2\tx1\tx2\tx3\th1\th2\tboundary_gap", 0) == 0);
  int rows = 0;
  for (char ch : table) rows += ch == '\n';
  CHECK(rows == 1 + 3 * 5);
  CHECK_FALSE(fs::exists(out.string() + ".tmp"));
  lp_report_free(r);
  fs::remove_all(out.parent_path());
}

TEST_CASE("command line front end") {
  const fs::path dir = scratch();
  CHECK(cli("localize " + fixture("r3_benchmark.json") + " --seed 42") == 0);
  CHECK(cli("economy-verify " + fixture("economy_planted.json")) == 1);
  CHECK(cli("localize " + fixture("invalid_pnorm.json")) == 2);
  CHECK(cli("bogus " + fixture("r3_benchmark.json")) == 2);
  CHECK(cli("localize") == 2);
  CHECK(cli("localize " + fixture("r3_benchmark.json") + " --tol-opt -1") == 2);

  const std::string a = (dir / "a.json").string(), b = (dir / "b.json").string();
  CHECK(cli("pareto-sweep " + fixture("nonconvex.json") + " --eps 0.2 --eps 0.4 --weights-grid 3 --out " + a) == 0);
  CHECK(cli("pareto-sweep " + fixture("nonconvex.json") + " --eps 0.2 --eps 0.4 --weights-grid 3 --threads 3 --out " + b) == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a + ".tsv") == slurp(b + ".tsv"));
  CHECK(slurp(a).find("\"eps_override\": [\n      0.2,\n      0.4\n    ]") != std::string::npos);
  fs::remove_all(dir);
}
