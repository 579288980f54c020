#include "locprog/locprog.h"

#include "CLI11.hpp"

#include <cstdio>
#include <string>
#include <vector>

int main(int argc, char** argv) {
  lp_config config;
  lp_config_init(&config);

  std::string command;
  std::string input;
  std::string out;
  std::vector<double> eps;

  CLI::App app{"Localized vector optimization and equilibrium checks"};
  app.set_version_flag("--version", std::string(lp_version()));
  app.add_option("command", command,
                 "check-regularity | economy-regularity | convexity-radius | localize | pareto-sweep | certify | "
                 "economy-solve | economy-verify")
      ->required();
  app.add_option("input", input, "problem file")->required();
  app.add_option("--seed", config.seed, "random seed")->capture_default_str();
  app.add_option("--tol-feas", config.tol_feasibility, "feasibility tolerance")->capture_default_str();
  app.add_option("--tol-opt", config.tol_optimality, "optimality tolerance")->capture_default_str();
  app.add_option("--tol-boundary", config.tol_boundary_rel, "relative boundary tolerance")->capture_default_str();
  int samples = config.certificate_samples;
  app.add_option("--samples", samples, "certificate and budget sample count")->capture_default_str();
  app.add_option("--pairs", config.convexity_pairs, "convexity pair count")->capture_default_str();
  app.add_option("--out", out, "write the report here (and PATH.tsv for sweeps) instead of stdout");
  app.add_option("--eps", eps, "radius; repeat to run several, replaces the file's list")->take_all();
  app.add_option("--weights-grid", config.weights_grid, "simplex grid steps for pareto-sweep")->capture_default_str();
  app.add_option("--starts", config.multi_starts, "solver multi-starts")->capture_default_str();
  app.add_option("--threads", config.threads, "worker threads; output does not depend on it")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  config.certificate_samples = samples;
  config.budget_samples = samples;
  config.eps = eps.empty() ? nullptr : eps.data();
  config.eps_count = eps.size();

  lp_report* report = nullptr;
  if (lp_run_file(command.c_str(), input.c_str(), &config, &report) != LP_OK) {
    std::fprintf(stderr, "locprog: %s\n", lp_last_error());
    return 2;
  }
  int code = lp_report_exit_code(report);
  if (out.empty()) {
    std::fputs(lp_report_json(report), stdout);
  } else if (lp_report_write(report, out.c_str()) != LP_OK) {
    std::fprintf(stderr, "locprog: %s\n", lp_last_error());
    code = 2;
  }
  lp_report_free(report);
  return code;
}
