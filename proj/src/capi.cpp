#include "locprog/locprog.h"

#include "locprog/error.hpp"
#include "locprog/problem_io.hpp"
#include "locprog/runner.hpp"
#include "locprog/spaces.hpp"

#include <memory>
#include <new>
#include <string>

using locprog::Error;
namespace cli = locprog::cli;
namespace io = locprog::io;

struct lp_problem {
  std::string text;
  io::ProblemFile file;
};

struct lp_report {
  cli::Report report;
};

namespace {

thread_local std::string last_error;

lp_status status_of(Error::Kind kind) {
  switch (kind) {
    case Error::Kind::domain:
      return LP_ERR_DOMAIN;
    case Error::Kind::precondition:
      return LP_ERR_PRECONDITION;
    case Error::Kind::validation:
      return LP_ERR_VALIDATION;
    case Error::Kind::parse:
      return LP_ERR_PARSE;
    case Error::Kind::solver_stall:
      return LP_ERR_SOLVER_STALL;
    case Error::Kind::non_convergence:
      return LP_ERR_NON_CONVERGENCE;
    case Error::Kind::infeasible_result:
      return LP_ERR_INFEASIBLE_RESULT;
    case Error::Kind::degenerate_multiplier:
      return LP_ERR_DEGENERATE_MULTIPLIER;
    case Error::Kind::sampling_starvation:
      return LP_ERR_SAMPLING_STARVATION;
    case Error::Kind::zero_price:
      return LP_ERR_ZERO_PRICE;
    case Error::Kind::degenerate_radius:
      return LP_ERR_DEGENERATE_RADIUS;
    case Error::Kind::empty_intersection:
      return LP_ERR_EMPTY_INTERSECTION;
    case Error::Kind::dimension_guard:
      return LP_ERR_DIMENSION_GUARD;
  }
  return LP_ERR_INTERNAL;
}

lp_status set_error(lp_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <class F>
lp_status guarded(F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const Error& e) {
    return set_error(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(LP_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(LP_ERR_INTERNAL, e.what());
  }
}

cli::RunConfig to_run_config(const lp_config* c) {
  cli::RunConfig cfg;
  if (!c) return cfg;
  cfg.seed = c->seed;
  cfg.tolerances.feasibility = c->tol_feasibility;
  cfg.tolerances.optimality = c->tol_optimality;
  cfg.tolerances.boundary_rel = c->tol_boundary_rel;
  cfg.samples.convexity_pairs = c->convexity_pairs;
  cfg.samples.certificate_samples = c->certificate_samples;
  cfg.samples.budget_samples = c->budget_samples;
  if (c->eps && c->eps_count > 0) cfg.eps.assign(c->eps, c->eps + c->eps_count);
  cfg.weights_grid = c->weights_grid;
  cfg.multi_starts = c->multi_starts;
  cfg.threads = c->threads;
  return cfg;
}

lp_status command_of(const char* name, cli::Command& out) {
  if (!name) return set_error(LP_ERR_INVALID_ARGUMENT, "command is null");
  const auto c = cli::parse_command(name);
  if (!c) return set_error(LP_ERR_INVALID_ARGUMENT, std::string("unknown command '") + name + "'");
  out = *c;
  return LP_OK;
}

locprog::spaces::SpaceSpec space_of(int dim, double p) {
  using locprog::spaces::SpaceSpec;
  return p == 0.0 ? SpaceSpec::euclidean(dim) : SpaceSpec::p_norm(dim, p);
}

}  // namespace

extern "C" {

LP_API void lp_config_init(lp_config* config) {
  if (!config) return;
  const cli::RunConfig d;
  *config = lp_config{};
  config->seed = d.seed;
  config->tol_feasibility = d.tolerances.feasibility;
  config->tol_optimality = d.tolerances.optimality;
  config->tol_boundary_rel = d.tolerances.boundary_rel;
  config->convexity_pairs = d.samples.convexity_pairs;
  config->certificate_samples = d.samples.certificate_samples;
  config->budget_samples = d.samples.budget_samples;
  config->eps = nullptr;
  config->eps_count = 0;
  config->weights_grid = d.weights_grid;
  config->multi_starts = d.multi_starts;
  config->threads = d.threads;
}

LP_API lp_status lp_problem_parse(const char* text, size_t length, lp_problem** out) {
  return guarded([&] {
    if (!text || !out) return set_error(LP_ERR_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    auto p = std::make_unique<lp_problem>();
    p->text.assign(text, length);
    p->file = io::parse_problem(p->text);
    *out = p.release();
    return LP_OK;
  });
}

LP_API lp_status lp_problem_load(const char* path, lp_problem** out) {
  return guarded([&] {
    if (!path || !out) return set_error(LP_ERR_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    std::string text;
    try {
      text = io::read_file(path);
    } catch (const Error& e) {
      return set_error(LP_ERR_IO, e.what());
    }
    return lp_problem_parse(text.data(), text.size(), out);
  });
}

LP_API lp_problem_kind lp_problem_kind_of(const lp_problem* problem) {
  if (!problem) return LP_KIND_VECTOR_PROBLEM;
  switch (problem->file.kind) {
    case io::ProblemFile::Kind::economy:
      return LP_KIND_ECONOMY;
    case io::ProblemFile::Kind::map:
      return LP_KIND_MAP;
    default:
      return LP_KIND_VECTOR_PROBLEM;
  }
}

LP_API void lp_problem_free(lp_problem* problem) { delete problem; }

LP_API lp_status lp_run(const char* command, const lp_problem* problem, const lp_config* config,
                        lp_report** out) {
  return guarded([&] {
    if (!problem || !out) return set_error(LP_ERR_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    cli::Command c;
    if (const auto s = command_of(command, c); s != LP_OK) return s;
    *out = new lp_report{cli::run_text(c, problem->text, to_run_config(config))};
    return LP_OK;
  });
}

LP_API lp_status lp_run_file(const char* command, const char* path, const lp_config* config,
                             lp_report** out) {
  return guarded([&] {
    if (!path || !out) return set_error(LP_ERR_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    cli::Command c;
    if (const auto s = command_of(command, c); s != LP_OK) return s;
    *out = new lp_report{cli::run(c, path, to_run_config(config))};
    return LP_OK;
  });
}

LP_API const char* lp_report_json(const lp_report* report) { return report ? report->report.json.c_str() : ""; }

LP_API const char* lp_report_table(const lp_report* report) { return report ? report->report.table.c_str() : ""; }

LP_API int lp_report_exit_code(const lp_report* report) { return report ? report->report.exit_code() : 2; }

LP_API lp_status lp_report_write(const lp_report* report, const char* path) {
  return guarded([&] {
    if (!report || !path) return set_error(LP_ERR_INVALID_ARGUMENT, "null argument");
    try {
      cli::write_report(report->report, path);
    } catch (const std::exception& e) {
      return set_error(LP_ERR_IO, e.what());
    }
    return LP_OK;
  });
}

LP_API void lp_report_free(lp_report* report) { delete report; }

LP_API const char* lp_last_error(void) { return last_error.c_str(); }

LP_API const char* lp_status_name(lp_status status) {
  switch (status) {
    case LP_OK:
      return "ok";
    case LP_ERR_INVALID_ARGUMENT:
      return "invalid_argument";
    case LP_ERR_IO:
      return "io";
    case LP_ERR_INTERNAL:
      return "internal";
    case LP_ERR_PARSE:
      return locprog::to_string(Error::Kind::parse);
    case LP_ERR_VALIDATION:
      return locprog::to_string(Error::Kind::validation);
    case LP_ERR_DOMAIN:
      return locprog::to_string(Error::Kind::domain);
    case LP_ERR_PRECONDITION:
      return locprog::to_string(Error::Kind::precondition);
    case LP_ERR_SOLVER_STALL:
      return locprog::to_string(Error::Kind::solver_stall);
    case LP_ERR_NON_CONVERGENCE:
      return locprog::to_string(Error::Kind::non_convergence);
    case LP_ERR_INFEASIBLE_RESULT:
      return locprog::to_string(Error::Kind::infeasible_result);
    case LP_ERR_DEGENERATE_MULTIPLIER:
      return locprog::to_string(Error::Kind::degenerate_multiplier);
    case LP_ERR_SAMPLING_STARVATION:
      return locprog::to_string(Error::Kind::sampling_starvation);
    case LP_ERR_ZERO_PRICE:
      return locprog::to_string(Error::Kind::zero_price);
    case LP_ERR_DEGENERATE_RADIUS:
      return locprog::to_string(Error::Kind::degenerate_radius);
    case LP_ERR_EMPTY_INTERSECTION:
      return locprog::to_string(Error::Kind::empty_intersection);
    case LP_ERR_DIMENSION_GUARD:
      return locprog::to_string(Error::Kind::dimension_guard);
  }
  return "unknown";
}

LP_API lp_status lp_modulus_of_convexity(int dim, double p, double eps, double* out) {
  return guarded([&] {
    if (!out) return set_error(LP_ERR_INVALID_ARGUMENT, "null argument");
    *out = locprog::spaces::modulus_of_convexity(space_of(dim, p), eps);
    return LP_OK;
  });
}

LP_API lp_status lp_quadratic_growth_constant(int dim, double p, double* out) {
  return guarded([&] {
    if (!out) return set_error(LP_ERR_INVALID_ARGUMENT, "null argument");
    *out = locprog::spaces::quadratic_growth_constant(space_of(dim, p));
    return LP_OK;
  });
}

LP_API const char* lp_version(void) { return "0.1.0"; }

}  // extern "C"
