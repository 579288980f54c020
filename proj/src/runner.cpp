#include "locprog/runner.hpp"

#include "locprog/convexity.hpp"
#include "locprog/economy.hpp"
#include "locprog/error.hpp"
#include "locprog/vopt.hpp"

#include "json.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace locprog::cli {

using ojson = nlohmann::ordered_json;
using io::ProblemFile;

namespace {

constexpr struct {
  Command command;
  const char* name;
} kCommands[] = {
    {Command::check_regularity, "check-regularity"},
    {Command::economy_regularity, "economy-regularity"},
    {Command::convexity_radius, "convexity-radius"},
    {Command::localize, "localize"},
    {Command::pareto_sweep, "pareto-sweep"},
    {Command::certify, "certify"},
    {Command::economy_solve, "economy-solve"},
    {Command::economy_verify, "economy-verify"},
};

const char* status_name(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::error:
      return "error";
    case Status::input_error:
      return "input_error";
  }
  return "error";
}

ojson vec(const Vector& v) {
  ojson a = ojson::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

ojson bundles(const economy::Economy& e, const Vector& x) {
  ojson a = ojson::array();
  for (int i = 0; i < e.n_consumers(); ++i) a.push_back(vec(e.bundle(x, i)));
  return a;
}

ojson check_json(const vopt::CheckResult& c) {
  ojson j;
  j["name"] = c.name;
  j["value"] = c.value;
  j["threshold"] = c.threshold;
  j["pass"] = c.pass;
  if (c.witness) j["witness"] = vec(*c.witness);
  return j;
}

ojson checks_json(const vopt::CheckReport& r) {
  ojson a = ojson::array();
  for (const auto& c : r.checks) a.push_back(check_json(c));
  return a;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Outcome {
  ojson results = ojson::object();
  std::vector<std::string> failed;
  std::vector<std::string> warnings;
  std::string table;
};

std::string eps_tag(double eps) { return "eps=" + fmt(eps); }

void require_kind(const ProblemFile& f, ProblemFile::Kind kind, Command c) {
  if (f.kind != kind)
    fail(Error::Kind::validation, std::string(command_name(c)) + " expects input of kind " + io::kind_name(kind) +
                                      ", got " + io::kind_name(f.kind));
}

vopt::SolveConfig solve_config(const RunConfig& cfg) {
  vopt::SolveConfig s;
  s.seed = cfg.seed;
  s.threads = cfg.threads;
  s.multi_starts = cfg.multi_starts;
  return s;
}

Vector uniform_weights(int k) { return Vector::Constant(k, 1.0 / k); }

std::vector<Vector> weights_for(const ProblemFile& f, int objectives) {
  if (!f.weights.empty()) return f.weights;
  return {uniform_weights(objectives)};
}

vopt::Localization localization(const ProblemFile& f, double eps) {
  if (f.problem) return vopt::Localization(*f.problem, f.x0, eps);
  return vopt::Localization(economy::as_vector_problem(*f.economy), f.x0, eps);
}

ojson openness_json(const calculus::OpennessEstimate& o) {
  ojson j;
  j["surjective"] = o.surjective;
  j["sigma"] = o.sigma;
  j["smallest_singular_value"] = o.smallest_singular_value;
  j["largest_singular_value"] = o.largest_singular_value;
  j["rank_tolerance"] = o.rank_tolerance;
  return j;
}

ojson nonoptimality_entries(const ProblemFile& f, const std::vector<double>& radii, const RunConfig& cfg,
                            Outcome& out) {
  ojson list = ojson::array();
  for (double eps : radii) {
    const auto loc = localization(f, eps);
    const auto v = vopt::check_nonoptimality_of_center(loc, cfg.samples.certificate_samples, cfg.seed,
                                                       cfg.tolerances.optimality, cfg.threads);
    ojson e;
    e["eps"] = eps;
    const bool found = v.status == vopt::NonoptimalityVerdict::Status::witness_found;
    e["verdict"] = found ? "witness_found" : "inconclusive";
    e["n_feasible"] = v.n_feasible;
    if (v.witness) e["witness"] = vec(*v.witness);
    if (v.gain) e["gain"] = vec(*v.gain);
    if (!found) out.warnings.push_back("center non-optimality inconclusive at " + eps_tag(eps));
    list.push_back(e);
  }
  return list;
}

Outcome check_regularity(const ProblemFile& f, const std::vector<double>& radii, const RunConfig& cfg) {
  Outcome out;
  if (f.kind == ProblemFile::Kind::economy) {
    const auto v = economy::check_regular(*f.economy, f.x0);
    out.results["regular"] = v.regular;
    out.results["sigma_min"] = v.sigma_min;
    out.results["interior_margin"] = v.interior_margin;
    if (v.determinant) out.results["determinant"] = *v.determinant;
    out.results["reason"] = v.reason;
    if (!v.regular) {
      out.failed.push_back("regularity");
      return out;
    }
    out.results["center_nonoptimality"] = nonoptimality_entries(f, radii, cfg, out);
    return out;
  }
  const calculus::SmoothMap map = f.map ? *f.map : vopt::image_map(*f.problem, f.x0);
  const auto o = calculus::surjectivity_check(map, f.x0);
  out.results["openness"] = openness_json(o);
  if (!o.surjective) {
    out.failed.push_back("surjectivity");
    return out;
  }
  if (f.problem) out.results["center_nonoptimality"] = nonoptimality_entries(f, radii, cfg, out);
  return out;
}

Outcome convexity_radius(const ProblemFile& f, const std::vector<double>& radii, const RunConfig& cfg) {
  Outcome out;
  calculus::SmoothMap map = f.map ? *f.map
                            : f.problem ? vopt::image_map(*f.problem, f.x0)
                                        : vopt::image_map(economy::as_vector_problem(*f.economy), f.x0);
  const double eps_max = f.eps_max.value_or(*std::max_element(radii.begin(), radii.end()));
  const int pairs = cfg.samples.convexity_pairs;
  const auto est = convexity::estimate_convexity_radius(map, f.x0, eps_max, cfg.tolerances.optimality, cfg.seed,
                                                        pairs, cfg.threads);
  ojson r;
  r["eps_max"] = eps_max;
  r["radius"] = est.radius;
  r["unbounded_in_window"] = est.unbounded_in_window;
  if (est.failing_radius) r["failing_radius"] = *est.failing_radius;
  r["evaluations"] = est.evaluations;
  r["n_pairs"] = est.n_pairs;
  r["seed"] = est.seed;
  out.results["estimate"] = r;
  if (est.unbounded_in_window) out.warnings.push_back("no failing radius found up to eps_max");

  convexity::ConvexityOptions opts;
  opts.n_pairs = pairs;
  opts.seed = cfg.seed;
  opts.tol = cfg.tolerances.optimality;
  opts.threads = cfg.threads;
  ojson reports = ojson::array();
  for (double eps : radii) {
    const auto rep = convexity::midpoint_convexity_residual(map, f.x0, eps, opts);
    ojson e;
    e["eps"] = eps;
    e["worst_midpoint_residual"] = rep.worst_midpoint_residual;
    e["tolerance"] = rep.tolerance;
    e["n_pairs"] = rep.n_pairs;
    e["stalled_pairs"] = rep.stalled_pairs;
    e["pass"] = rep.pass;
    if (rep.witness_pair) e["witness_pair"] = ojson::array({vec(rep.witness_pair->first), vec(rep.witness_pair->second)});
    if (rep.pass) {
      const int probes = std::max(8, std::min(pairs / 10, 200));
      const auto bp = convexity::boundary_preimage_check(map, f.x0, eps, probes, cfg.seed,
                                                         cfg.tolerances.boundary_rel, cfg.threads);
      e["boundary_preimage"] = {{"max_interior_gap", bp.max_interior_gap}, {"n_probes", bp.n_probes}, {"pass", bp.pass}};
      if (!bp.pass) out.failed.push_back("boundary_preimage[" + eps_tag(eps) + "]");
    }
    reports.push_back(e);
  }
  out.results["reports"] = reports;
  return out;
}

ojson certificate_json(const vopt::VectorProblem& p, const vopt::SolutionCertificate& c) {
  ojson j;
  j["weights"] = vec(c.scalarization_weights);
  j["x_eps"] = vec(c.x_eps);
  j["h"] = vec(p.h().evaluate(c.x_eps));
  j["w_star"] = vec(c.w_star);
  j["y_star"] = vec(c.y_star);
  j["lambda"] = c.lambda;
  j["objective_value"] = c.objective_value;
  j["infeasibility"] = c.infeasibility;
  j["stationarity"] = c.stationarity;
  j["start_index"] = c.start_index;
  j["residuals"] = {{"boundary_gap", c.residuals.boundary_gap},
                    {"dual_cone_violation", c.residuals.dual_cone_violation},
                    {"normal_cone_violation", c.residuals.normal_cone_violation},
                    {"lagrangian_violation", c.residuals.lagrangian_violation},
                    {"complementarity_gap", c.residuals.complementarity_gap}};
  return j;
}

Outcome localize(const ProblemFile& f, const std::vector<double>& radii, const RunConfig& cfg) {
  require_kind(f, ProblemFile::Kind::vector_problem, Command::localize);
  Outcome out;
  const auto& p = *f.problem;
  ojson list = ojson::array();
  for (double eps : radii) {
    const auto loc = localization(f, eps);
    const auto weights = weights_for(f, p.objective_dim());
    for (std::size_t k = 0; k < weights.size(); ++k) {
      const auto cert = vopt::solve_localization(loc, weights[k], solve_config(cfg));
      const auto rep = vopt::check_certificate(loc, cert, cfg.samples.certificate_samples, cfg.seed,
                                               cfg.tolerances.optimality, cfg.threads);
      ojson e{{"eps", eps}, {"weight_index", k}};
      e.update(certificate_json(p, cert));
      e["checks"] = checks_json(rep);
      const std::string tag = eps_tag(eps) + ",w" + std::to_string(k);
      for (const auto& c : rep.checks)
        if (!c.pass) out.failed.push_back(c.name + "[" + tag + "]");
      if (cert.residuals.boundary_gap > cfg.tolerances.boundary_rel) out.failed.push_back("boundary_rel[" + tag + "]");
      list.push_back(e);
    }
  }
  out.results["localizations"] = list;
  return out;
}

Outcome pareto_sweep(const ProblemFile& f, const std::vector<double>& radii, const RunConfig& cfg) {
  require_kind(f, ProblemFile::Kind::vector_problem, Command::pareto_sweep);
  Outcome out;
  const auto& p = *f.problem;
  const int k = p.objective_dim();
  const std::vector<Vector> grid = cfg.weights_grid > 0 ? vopt::simplex_weight_grid(k, cfg.weights_grid)
                                   : f.weights.empty()  ? vopt::simplex_weight_grid(k, 10)
                                                        : f.weights;
  std::ostringstream table;
  table << "eps";
  for (int i = 0; i < k; ++i) table << "\tw" << i + 1;
  for (int i = 0; i < p.domain_dim(); ++i) table << "\tx" << i + 1;
  for (int i = 0; i < k; ++i) table << "\th" << i + 1;
  table << "\tboundary_gap\tdual_cone_violation\tnormal_cone_violation\tlagrangian_violation\tcomplementarity_gap\n";

  ojson sweeps = ojson::array();
  for (double eps : radii) {
    const auto loc = localization(f, eps);
    const auto sweep = vopt::pareto_sweep(loc, grid, solve_config(cfg), cfg.tolerances.optimality);
    ojson certs = ojson::array();
    for (const auto& c : sweep.certificates) {
      certs.push_back(certificate_json(p, c));
      const Vector h = p.h().evaluate(c.x_eps);
      table << fmt(eps);
      for (Eigen::Index i = 0; i < c.scalarization_weights.size(); ++i) table << '\t' << fmt(c.scalarization_weights(i));
      for (Eigen::Index i = 0; i < c.x_eps.size(); ++i) table << '\t' << fmt(c.x_eps(i));
      for (Eigen::Index i = 0; i < h.size(); ++i) table << '\t' << fmt(h(i));
      const auto& r = c.residuals;
      table << '\t' << fmt(r.boundary_gap) << '\t' << fmt(r.dual_cone_violation) << '\t' << fmt(r.normal_cone_violation)
            << '\t' << fmt(r.lagrangian_violation) << '\t' << fmt(r.complementarity_gap) << '\n';
    }
    ojson notes = ojson::array();
    for (const auto& a : sweep.annotations) {
      notes.push_back({{"weight_index", a.weight_index}, {"weights", vec(a.weights)}, {"kind", to_string(a.kind)},
                       {"message", a.message}});
      out.warnings.push_back("weight " + std::to_string(a.weight_index) + " at " + eps_tag(eps) + ": " + a.message);
    }
    sweeps.push_back({{"eps", eps},
                      {"n_weights", grid.size()},
                      {"duplicates_removed", sweep.duplicates_removed},
                      {"dominated_removed", sweep.dominated_removed},
                      {"certificates", certs},
                      {"annotations", notes}});
  }
  out.results["sweeps"] = sweeps;
  out.table = table.str();
  return out;
}

Outcome certify(const ProblemFile& f, const std::vector<double>& radii, const RunConfig& cfg) {
  require_kind(f, ProblemFile::Kind::vector_problem, Command::certify);
  if (!f.certificate) fail(Error::Kind::validation, "certify needs a 'certificate' section in the input file");
  Outcome out;
  const double eps = radii.front();
  const auto loc = localization(f, eps);
  const auto rep = vopt::check_certificate(loc, *f.certificate, cfg.samples.certificate_samples, cfg.seed,
                                           cfg.tolerances.optimality, cfg.threads);
  out.results["eps"] = eps;
  out.results["x_eps"] = vec(f.certificate->x_eps);
  out.results["w_star"] = vec(f.certificate->w_star);
  out.results["y_star"] = vec(f.certificate->y_star);
  out.results["checks"] = checks_json(rep);
  for (const auto& c : rep.checks)
    if (!c.pass) out.failed.push_back(c.name);
  return out;
}

ojson equilibrium_json(const economy::Economy& e, const economy::EquilibriumCertificate& c) {
  ojson j;
  j["allocation"] = bundles(e, c.allocation);
  j["reference"] = bundles(e, c.reference);
  j["price"] = vec(c.price);
  ojson dist = ojson::array();
  for (const auto& w : c.distribution) dist.push_back(vec(w));
  j["distribution"] = dist;
  j["radii"] = c.radii;
  if (c.weights.size() > 0) {
    j["weights"] = vec(c.weights);
    j["normalizing_index"] = c.normalizing_index;
  }
  j["residuals"] = {{"positivity", c.residuals.positivity},
                    {"market_clearing", c.residuals.market_clearing},
                    {"distribution_consistency", c.residuals.distribution_consistency},
                    {"individual_optimality", c.residuals.individual_optimality}};
  return j;
}

ojson audit_json(const economy::EquilibriumReport& rep) {
  ojson a = ojson::array();
  for (const auto& c : rep.consumers) {
    ojson j{{"budget_samples", c.budget_samples}, {"violations", c.violations}, {"max_gain", c.max_gain}};
    if (c.witness) j["witness"] = vec(*c.witness);
    a.push_back(j);
  }
  return a;
}

Outcome economy_solve(const ProblemFile& f, const std::vector<double>& radii, const RunConfig& cfg) {
  require_kind(f, ProblemFile::Kind::economy, Command::economy_solve);
  Outcome out;
  const auto& e = *f.economy;
  ojson list = ojson::array();
  for (double eps : radii) {
    const auto weights = weights_for(f, e.n_consumers());
    for (std::size_t k = 0; k < weights.size(); ++k) {
      const auto result = economy::localized_pareto(e, f.x0, eps, weights[k], solve_config(cfg));
      const auto eq = economy::build_equilibrium(e, f.x0, result);
      const auto rep = economy::verify_equilibrium(e, eq, cfg.samples.budget_samples, cfg.seed,
                                                   cfg.tolerances.optimality, cfg.threads);
      ojson entry{{"eps", eps}, {"weight_index", k}};
      entry["pareto"] = certificate_json(economy::as_vector_problem(e), result.certificate);
      entry["equilibrium"] = equilibrium_json(e, eq);
      entry["checks"] = checks_json(rep.checks);
      entry["consumers"] = audit_json(rep);
      const std::string tag = eps_tag(eps) + ",w" + std::to_string(k);
      for (const auto& c : rep.checks.checks)
        if (!c.pass) out.failed.push_back(c.name + "[" + tag + "]");
      if (eq.residuals.market_clearing > cfg.tolerances.feasibility)
        out.failed.push_back("market_clearing_feasibility[" + tag + "]");
      if (result.certificate.residuals.boundary_gap > cfg.tolerances.boundary_rel)
        out.failed.push_back("boundary_rel[" + tag + "]");
      list.push_back(entry);
    }
  }
  out.results["equilibria"] = list;
  return out;
}

Outcome economy_verify(const ProblemFile& f, const RunConfig& cfg) {
  require_kind(f, ProblemFile::Kind::economy, Command::economy_verify);
  if (!f.equilibrium) fail(Error::Kind::validation, "economy-verify needs a 'certificate' section in the input file");
  Outcome out;
  const auto& e = *f.economy;
  const auto rep = economy::verify_equilibrium(e, *f.equilibrium, cfg.samples.budget_samples, cfg.seed,
                                               cfg.tolerances.optimality, cfg.threads);
  out.results["equilibrium"] = equilibrium_json(e, *f.equilibrium);
  out.results["checks"] = checks_json(rep.checks);
  out.results["consumers"] = audit_json(rep);
  for (const auto& c : rep.checks.checks)
    if (!c.pass) out.failed.push_back(c.name);
  return out;
}

Outcome dispatch(Command command, const ProblemFile& f, const RunConfig& cfg) {
  const std::vector<double> radii = cfg.eps.empty() ? f.eps : cfg.eps;
  if (!cfg.eps.empty()) {
    try {
      io::validate_radii(f, radii);
    } catch (const Error& e) {
      fail(Error::Kind::validation, std::string("--eps: ") + e.what());
    }
  }
  switch (command) {
    case Command::check_regularity:
      return check_regularity(f, radii, cfg);
    case Command::economy_regularity:
      require_kind(f, ProblemFile::Kind::economy, command);
      return check_regularity(f, radii, cfg);
    case Command::convexity_radius:
      return convexity_radius(f, radii, cfg);
    case Command::localize:
      return localize(f, radii, cfg);
    case Command::pareto_sweep:
      return pareto_sweep(f, radii, cfg);
    case Command::certify:
      return certify(f, radii, cfg);
    case Command::economy_solve:
      return economy_solve(f, radii, cfg);
    case Command::economy_verify:
      return economy_verify(f, cfg);
  }
  fail(Error::Kind::validation, "unknown command");
}

ojson config_json(const RunConfig& cfg) {
  ojson j;
  j["seed"] = cfg.seed;
  j["tolerances"] = {{"feasibility", cfg.tolerances.feasibility},
                     {"optimality", cfg.tolerances.optimality},
                     {"boundary_rel", cfg.tolerances.boundary_rel}};
  j["sample_counts"] = {{"convexity_pairs", cfg.samples.convexity_pairs},
                        {"certificate_samples", cfg.samples.certificate_samples},
                        {"budget_samples", cfg.samples.budget_samples}};
  j["eps_override"] = cfg.eps;
  j["weights_grid"] = cfg.weights_grid;
  j["multi_starts"] = cfg.multi_starts;
  return j;
}

Report finish(Command command, const std::string& digest, const std::optional<ProblemFile::Kind>& kind,
              const RunConfig& cfg, Status status, Outcome out, ojson failure) {
  Report report;
  report.command = command_name(command);
  report.inputs_digest = digest;
  report.status = status;
  ojson doc;
  doc["command"] = report.command;
  doc["inputs_digest"] = digest;
  doc["input_kind"] = kind ? ojson(io::kind_name(*kind)) : ojson(nullptr);
  doc["config"] = config_json(cfg);
  doc["status"] = status_name(status);
  doc["results"] = std::move(out.results);
  doc["warnings"] = out.warnings;
  if (!failure.is_null()) doc["failure"] = std::move(failure);
  report.json = doc.dump(2) + "\n";
  report.table = std::move(out.table);
  return report;
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  for (const auto& c : kCommands)
    if (name == c.name) return c.command;
  return std::nullopt;
}

const char* command_name(Command command) noexcept {
  for (const auto& c : kCommands)
    if (c.command == command) return c.name;
  return "unknown";
}

const std::vector<Command>& all_commands() {
  static const std::vector<Command> commands = [] {
    std::vector<Command> v;
    for (const auto& c : kCommands) v.push_back(c.command);
    return v;
  }();
  return commands;
}

void RunConfig::validate() const {
  auto positive = [](double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) fail(Error::Kind::validation, std::string(what) + " must be positive");
  };
  positive(tolerances.feasibility, "feasibility tolerance");
  positive(tolerances.optimality, "optimality tolerance");
  positive(tolerances.boundary_rel, "boundary tolerance");
  if (samples.convexity_pairs < 1) fail(Error::Kind::validation, "convexity pair count must be >= 1");
  if (samples.certificate_samples < 1) fail(Error::Kind::validation, "certificate sample count must be >= 1");
  if (samples.budget_samples < 1) fail(Error::Kind::validation, "budget sample count must be >= 1");
  if (weights_grid < 0) fail(Error::Kind::validation, "weights grid must be >= 0");
  if (multi_starts < 1) fail(Error::Kind::validation, "multi-start count must be >= 1");
  for (double e : eps) positive(e, "eps");
}

int Report::exit_code() const noexcept {
  switch (status) {
    case Status::pass:
      return 0;
    case Status::input_error:
      return 2;
    default:
      return 1;
  }
}

std::string content_digest(std::string_view bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 digest failed");
  static const char* hex = "0123456789abcdef";
  std::string out = "sha256:";
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 0xF];
  }
  return out;
}

Report run_text(Command command, std::string_view text, const RunConfig& config) {
  const std::string digest = content_digest(text);
  std::optional<ProblemFile::Kind> kind;
  try {
    config.validate();
    const ProblemFile file = io::parse_problem(text);
    kind = file.kind;
    Outcome out = dispatch(command, file, config);
    if (out.failed.empty()) return finish(command, digest, kind, config, Status::pass, std::move(out), nullptr);
    ojson failure{{"type", "check_failure"}, {"failed_checks", out.failed}};
    return finish(command, digest, kind, config, Status::fail, std::move(out), std::move(failure));
  } catch (const Error& e) {
    ojson failure{{"type", "error"}, {"kind", to_string(e.kind())}, {"message", e.what()}};
    return finish(command, digest, kind, config, e.is_input_error() ? Status::input_error : Status::error, Outcome{},
                  std::move(failure));
  } catch (const std::exception& e) {
    ojson failure{{"type", "error"}, {"kind", "internal"}, {"message", e.what()}};
    return finish(command, digest, kind, config, Status::error, Outcome{}, std::move(failure));
  }
}

Report run(Command command, const std::string& input_path, const RunConfig& config) {
  std::string text;
  try {
    text = io::read_file(input_path);
  } catch (const Error& e) {
    ojson failure{{"type", "error"}, {"kind", to_string(e.kind())}, {"message", e.what()}};
    return finish(command, content_digest(""), std::nullopt, config, Status::input_error, Outcome{},
                  std::move(failure));
  }
  return run_text(command, text, config);
}

void write_atomically(const std::string& path, std::string_view content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw std::runtime_error("write failed for '" + tmp.string() + "'");
  }
  fs::rename(tmp, target);
}

void write_report(const Report& report, const std::string& path) {
  write_atomically(path, report.json);
  if (!report.table.empty()) write_atomically(path + ".tsv", report.table);
}

}  // namespace locprog::cli
