#include "locprog/vopt.hpp"

#include "locprog/optim.hpp"
#include "locprog/parallel.hpp"
#include "locprog/random.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

namespace locprog::vopt {

using calculus::Region;
using calculus::SmoothMap;
using spaces::project_to_ball;

namespace {

constexpr double kSampleFeasibility = 1e-9;
constexpr double kInfeasibleResult = 1e-6;
constexpr double kStationarityLimit = 1e-5;
constexpr double kBoundaryPrecondition = 1e-4;
constexpr double kMultiplierResidual = 1e-5;
constexpr int kMinFeasibleSamples = 100;

/// Gauss-Newton minimum-norm steps onto g^{-1}(C), kept inside the ball.
std::optional<Vector> pull_to_feasible(const VectorProblem& p, const spaces::Ball& ball, Vector x) {
  for (int k = 0; k < 40; ++k) {
    const Vector gx = p.g().evaluate(x);
    const Vector r = gx - p.constraint().project(gx);
    if (r.norm() <= kSampleFeasibility) return x;
    const Matrix j = p.g().jacobian(x);
    const Vector dx = j.completeOrthogonalDecomposition().solve(r);
    if (!dx.allFinite()) return std::nullopt;
    x = project_to_ball(ball, x - dx);
  }
  return std::nullopt;
}

/// Attempt i draws uniformly in the ball, on the sphere, or near `anchor`
/// according to i mod 3.
Vector draw_attempt(const Localization& loc, const Vector& anchor, std::uint64_t seed,
                    std::uint64_t index) {
  Rng rng = make_rng(seed, stream::feasible_sampler, index);
  switch (index % 3) {
    case 0:
      return sample_in_ball(rng, loc.x0(), loc.eps());
    case 1:
      return sample_on_sphere(rng, loc.x0(), loc.eps());
    default:
      return project_to_ball(loc.ball(), sample_in_ball(rng, anchor, 0.1 * loc.eps()));
  }
}

/// Up to n feasible points of the localization in attempt-index order.
std::vector<Vector> sample_feasible(const Localization& loc, const Vector& anchor, int n,
                                    std::uint64_t seed, int threads) {
  std::vector<Vector> found;
  const auto block = static_cast<std::size_t>(std::max(n, 1));
  for (std::size_t round = 0; round < 4 && static_cast<int>(found.size()) < n; ++round) {
    std::vector<std::optional<Vector>> slots(block);
    parallel_for(block, threads, [&](std::size_t i) {
      const std::uint64_t index = round * block + i;
      slots[i] = pull_to_feasible(loc.problem(), loc.ball(), draw_attempt(loc, anchor, seed, index));
    });
    for (auto& s : slots) {
      if (s && static_cast<int>(found.size()) < n) found.push_back(std::move(*s));
    }
  }
  return found;
}

struct DominanceSearch {
  std::optional<Vector> witness;
  std::optional<Vector> gain;
  int n_feasible = 0;
};

DominanceSearch search_dominating(const Localization& loc, const Vector& reference, int n_samples,
                                  std::uint64_t seed, double tol, int threads) {
  const auto& p = loc.problem();
  const auto samples = sample_feasible(loc, reference, n_samples, seed, threads);
  const Vector h_ref = p.h().evaluate(reference);
  const Matrix& dual = p.order_cone().dual_generators();
  DominanceSearch out;
  out.n_feasible = static_cast<int>(samples.size());
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& x : samples) {
    const Vector d = p.h().evaluate(x) - h_ref;
    if (!p.order_cone().dominates(d, tol)) continue;
    const double margin = (dual.transpose() * d).maxCoeff();
    if (margin > best) {
      best = margin;
      out.witness = x;
      out.gain = d;
    }
  }
  return out;
}

/// Largest sampled L(x) - L(z) over the ball; samples are split between the
/// ball, its sphere, and the sphere near z.
CheckResult lagrangian_maximality(const Localization& loc, const Vector& z, const Vector& w,
                                  const Vector& y, int n_samples, std::uint64_t seed, double tol,
                                  int threads) {
  const auto& p = loc.problem();
  const double base = lagrangian(p, w, y, z);
  const auto n = static_cast<std::size_t>(std::max(n_samples, 0));
  std::vector<double> gaps(n);
  std::vector<Vector> points(n);
  parallel_for(n, threads, [&](std::size_t i) {
    Rng rng = make_rng(seed, stream::certificate, i);
    Vector x;
    switch (i % 3) {
      case 0:
        x = sample_in_ball(rng, loc.x0(), loc.eps());
        break;
      case 1:
        x = sample_on_sphere(rng, loc.x0(), loc.eps());
        break;
      default: {
        const Vector near = sample_in_ball(rng, z, 0.05 * loc.eps());
        const Vector offset = near - loc.x0();
        x = offset.norm() > 0.0 ? Vector(loc.x0() + loc.eps() * offset / offset.norm()) : near;
        x = project_to_ball(loc.ball(), x);
      }
    }
    gaps[i] = lagrangian(p, w, y, x) - base;
    points[i] = std::move(x);
  });
  CheckResult r{"lagrangian_max", 0.0, tol, true, std::nullopt};
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    if (gaps[i] > worst) {
      worst = gaps[i];
      if (gaps[i] > tol) r.witness = points[i];
    }
  }
  r.value = std::max(0.0, worst);
  r.pass = r.value <= tol;
  return r;
}

CheckResult normal_cone_check(const VectorProblem& p, const Vector& x, const Vector& y, double tol) {
  const double v = p.constraint().normal_cone_violation(p.g().evaluate(x), -y);
  return {"normal_cone", v, tol, v <= tol, std::nullopt};
}

struct StartOutcome {
  Vector x;
  double value = 0.0;
  double infeasibility = 0.0;
  double stationarity = 0.0;
};

StartOutcome augmented_lagrangian(const Localization& loc, const Vector& w, const Vector& start,
                                  const SolveConfig& config) {
  const auto& p = loc.problem();
  const auto& c = p.constraint();
  const spaces::Ball ball = loc.ball();
  Vector nu = Vector::Zero(p.constraint_dim());
  double rho = 10.0;
  double previous = std::numeric_limits<double>::infinity();
  optim::SpgOptions spg;
  spg.tolerance = 1e-11;
  spg.max_iterations = config.max_iters;
  Vector x = project_to_ball(ball, start);
  double stationarity = std::numeric_limits<double>::infinity();

  for (int outer = 0; outer < config.max_penalty_updates; ++outer) {
    const optim::Objective phi = [&](const Vector& v, Vector& grad) {
      const Vector z = p.g().evaluate(v) + nu / rho;
      const Vector r = z - c.project(z);
      grad = p.h().jacobian(v).transpose() * w - rho * (p.g().jacobian(v).transpose() * r);
      return w.dot(p.h().evaluate(v)) - 0.5 * rho * r.squaredNorm();
    };
    const auto inner = optim::spg_maximize(phi, ball, x, spg);
    x = inner.x;
    const Vector gx = p.g().evaluate(x);
    const Vector z = gx + nu / rho;
    nu = rho * (z - c.project(z));
    const double infeasibility = c.distance(gx);
    // Inner stationarity with the updated multiplier is Lagrangian stationarity.
    stationarity = inner.stationarity;
    if (infeasibility <= 1e-11 * std::max(1.0, gx.norm()) && stationarity <= 1e-9) break;
    if (infeasibility > 0.25 * previous) rho = std::min(2.0 * rho, 1e8);
    previous = infeasibility;
  }
  const Vector grad = p.h().jacobian(x).transpose() * w - p.g().jacobian(x).transpose() * nu;
  StartOutcome out;
  out.x = x;
  out.value = w.dot(p.h().evaluate(x));
  out.infeasibility = p.infeasibility(x);
  out.stationarity = optim::projected_gradient_norm(ball, x, grad);
  return out;
}

Vector normalized_weights(const ConeSpec& k, const Vector& weights) {
  if (weights.size() != k.ambient_dim())
    fail(Error::Kind::precondition, "weights must have the dimension of the objective space");
  const double l1 = weights.lpNorm<1>();
  if (!(l1 > 0.0) || !std::isfinite(l1)) fail(Error::Kind::precondition, "weights must be nonzero");
  if (!k.dual_contains(weights, 1e-12 * l1)) fail(Error::Kind::precondition, "weights must lie in the dual cone");
  return weights / l1;
}

bool lexicographic_less(const Vector& a, const Vector& b) {
  for (Eigen::Index i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (a(i) < b(i)) return true;
    if (a(i) > b(i)) return false;
  }
  return a.size() < b.size();
}

}  // namespace

VectorProblem::VectorProblem(SmoothMap h, SmoothMap g, ConstraintSet c, ConeSpec k, Region region)
    : h_(std::move(h)), g_(std::move(g)), c_(std::move(c)), k_(std::move(k)), region_(std::move(region)) {
  if (h_.domain_dim() != g_.domain_dim())
    fail(Error::Kind::validation, "h and g must share the domain dimension");
  if (c_.ambient_dim() != g_.codomain_dim())
    fail(Error::Kind::validation, "C must live in the codomain of g");
  if (k_.ambient_dim() != h_.codomain_dim())
    fail(Error::Kind::validation, "K must live in the codomain of h");
  if (region_.dim() != h_.domain_dim())
    fail(Error::Kind::validation, "region dimension must match the domain of h");
  region_ = region_.intersect(h_.region()).intersect(g_.region());
}

VectorProblem::VectorProblem(SmoothMap h, SmoothMap g, ConstraintSet c, ConeSpec k)
    : VectorProblem(h, g, std::move(c), std::move(k), Region::unbounded(h.domain_dim())) {}

Localization::Localization(VectorProblem problem, Vector x0, double eps, double feasibility_tol)
    : problem_(std::move(problem)), x0_(std::move(x0)), eps_(eps) {
  if (x0_.size() != problem_.domain_dim()) fail(Error::Kind::validation, "x0 has the wrong dimension");
  if (!(eps_ > 0.0) || !std::isfinite(eps_)) fail(Error::Kind::validation, "eps must be positive");
  if (!problem_.region().contains_ball(x0_, eps_))
    fail(Error::Kind::validation, "B(x0, eps) is not inside the region");
  if (problem_.infeasibility(x0_) > feasibility_tol)
    fail(Error::Kind::validation, "x0 is not feasible: g(x0) is not in C");
}

double lagrangian(const VectorProblem& problem, const Vector& w, const Vector& y, const Vector& x) {
  return w.dot(problem.h().evaluate(x)) + y.dot(problem.g().evaluate(x));
}

SmoothMap image_map(const VectorProblem& problem, const Vector& xbar) {
  const Vector hbar = problem.h().evaluate(xbar);
  return calculus::stack({calculus::translate(problem.h(), -hbar), problem.g()})
      .with_region(problem.region());
}

LocalOptimalityVerdict check_local_optimality(const Localization& loc, const Vector& candidate,
                                              int n_samples, std::uint64_t seed, double tol,
                                              int threads) {
  if (candidate.size() != loc.problem().domain_dim())
    fail(Error::Kind::precondition, "candidate has the wrong dimension");
  if (!loc.ball().contains(candidate, 1e-12 * (1.0 + loc.eps())))
    fail(Error::Kind::precondition, "candidate is outside B(x0, eps)");
  if (loc.problem().infeasibility(candidate) > tol)
    fail(Error::Kind::precondition, "candidate is not feasible");
  const auto search = search_dominating(loc, candidate, n_samples, seed, tol, threads);
  if (search.n_feasible < kMinFeasibleSamples)
    fail(Error::Kind::sampling_starvation,
         "only " + std::to_string(search.n_feasible) + " feasible samples found");
  LocalOptimalityVerdict v;
  v.n_feasible = search.n_feasible;
  if (search.witness) {
    v.status = LocalOptimalityVerdict::Status::dominated;
    v.witness = search.witness;
    v.gain = search.gain;
  }
  return v;
}

Multipliers recover_multipliers(const Localization& loc, const Vector& x_eps) {
  const auto& p = loc.problem();
  const Vector offset = x_eps - loc.x0();
  const double r = offset.norm();
  if (std::abs(r - loc.eps()) > kBoundaryPrecondition * loc.eps())
    fail(Error::Kind::precondition, "x_eps is not on the boundary of B(x0, eps)");
  if (p.infeasibility(x_eps) > kInfeasibleResult) fail(Error::Kind::precondition, "x_eps is not feasible");

  const Vector normal = offset / r;
  const Matrix jh = p.h().jacobian(x_eps);
  const Matrix jg = p.g().jacobian(x_eps);
  const Matrix& dual = p.order_cone().dual_generators();
  const Matrix normals = p.constraint().normal_cone_generators(p.g().evaluate(x_eps));

  Matrix a(x_eps.size(), dual.cols() + normals.cols());
  a.leftCols(dual.cols()) = jh.transpose() * dual;
  if (normals.cols() > 0) a.rightCols(normals.cols()) = -(jg.transpose() * normals);
  const auto fit = nnls(a, normal);

  Multipliers m;
  m.w_star = dual * fit.solution.head(dual.cols());
  m.y_star = normals.cols() > 0 ? Vector(-(normals * fit.solution.tail(normals.cols())))
                                : Vector(Vector::Zero(p.constraint_dim()));
  const double scale = std::sqrt(m.w_star.squaredNorm() + m.y_star.squaredNorm());
  if (!(scale > 1e-14)) fail(Error::Kind::degenerate_multiplier, "no nonzero multiplier pair found");
  m.residual = fit.residual_norm / scale;
  if (m.residual > kMultiplierResidual)
    fail(Error::Kind::degenerate_multiplier,
         "stationarity residual " + std::to_string(m.residual) + " exceeds 1e-5");
  m.w_star /= scale;
  m.y_star /= scale;
  m.lambda = 1.0 / scale;
  return m;
}

SolutionCertificate solve_localization(const Localization& loc, const Vector& weights,
                                       const SolveConfig& config) {
  const auto& p = loc.problem();
  const Vector w = normalized_weights(p.order_cone(), weights);
  const auto starts = static_cast<std::size_t>(std::max(1, config.multi_starts));
  std::vector<StartOutcome> outcomes(starts);
  parallel_for(starts, config.threads, [&](std::size_t i) {
    Vector start = loc.x0();
    if (i > 0) {
      Rng rng = make_rng(config.seed, stream::solve_starts, i);
      start = sample_in_ball(rng, loc.x0(), loc.eps());
    }
    outcomes[i] = augmented_lagrangian(loc, w, start, config);
  });

  std::optional<std::size_t> best;
  double least_infeasible = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < starts; ++i) {
    least_infeasible = std::min(least_infeasible, outcomes[i].infeasibility);
    if (outcomes[i].infeasibility > kInfeasibleResult) continue;
    if (!best) {
      best = i;
      continue;
    }
    const double incumbent = outcomes[*best].value;
    if (outcomes[i].value > incumbent + 1e-12 * std::max(1.0, std::abs(incumbent))) best = i;
  }
  if (!best)
    fail(Error::Kind::infeasible_result,
         "no start reached dist(g(x), C) <= 1e-6 (best " + std::to_string(least_infeasible) + ")");
  const StartOutcome& win = outcomes[*best];
  if (win.stationarity > kStationarityLimit)
    fail(Error::Kind::non_convergence,
         "stationarity " + std::to_string(win.stationarity) + " exceeds 1e-5 at the iteration budget");

  const Multipliers m = recover_multipliers(loc, win.x);
  SolutionCertificate cert;
  cert.x_eps = win.x;
  cert.w_star = m.w_star;
  cert.y_star = m.y_star;
  cert.scalarization_weights = w;
  cert.lambda = m.lambda;
  cert.objective_value = win.value;
  cert.infeasibility = win.infeasibility;
  cert.stationarity = win.stationarity;
  cert.start_index = static_cast<int>(*best);
  const Vector gx = p.g().evaluate(win.x);
  auto& res = cert.residuals;
  res.boundary_gap = std::abs((win.x - loc.x0()).norm() - loc.eps()) / loc.eps();
  res.dual_cone_violation = p.order_cone().dual_violation(m.w_star);
  res.normal_cone_violation = p.constraint().normal_cone_violation(gx, -m.y_star);
  res.lagrangian_violation = m.residual;
  res.complementarity_gap = p.constraint().is_cone() ? std::abs(m.y_star.dot(gx)) : 0.0;
  return cert;
}

std::vector<Vector> simplex_weight_grid(int objectives, int steps) {
  if (objectives < 1 || steps < 1) fail(Error::Kind::validation, "weight grid needs objectives >= 1 and steps >= 1");
  std::vector<Vector> grid;
  std::vector<int> parts(static_cast<std::size_t>(objectives), 0);
  std::function<void(int, int)> fill = [&](int index, int remaining) {
    if (index == objectives - 1) {
      parts[static_cast<std::size_t>(index)] = remaining;
      Vector w(objectives);
      for (int i = 0; i < objectives; ++i) w(i) = static_cast<double>(parts[static_cast<std::size_t>(i)]) / steps;
      grid.push_back(w);
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      parts[static_cast<std::size_t>(index)] = k;
      fill(index + 1, remaining - k);
    }
  };
  fill(0, steps);
  return grid;
}

SweepResult pareto_sweep(const Localization& loc, const std::vector<Vector>& weight_grid,
                         const SolveConfig& config, double dominance_tol) {
  const std::size_t n = weight_grid.size();
  std::vector<std::optional<SolutionCertificate>> certs(n);
  std::vector<std::optional<SweepAnnotation>> notes(n);
  SolveConfig inner = config;
  inner.threads = 1;
  parallel_for(n, config.threads, [&](std::size_t i) {
    try {
      certs[i] = solve_localization(loc, weight_grid[i], inner);
    } catch (const Error& e) {
      notes[i] = SweepAnnotation{i, weight_grid[i], e.kind(), e.what()};
    }
  });

  SweepResult result;
  std::vector<SolutionCertificate> kept;
  for (std::size_t i = 0; i < n; ++i) {
    if (notes[i]) result.annotations.push_back(*notes[i]);
    if (!certs[i]) continue;
    const bool duplicate = std::any_of(kept.begin(), kept.end(), [&](const SolutionCertificate& c) {
      return (c.x_eps - certs[i]->x_eps).norm() < 1e-6;
    });
    if (duplicate) {
      ++result.duplicates_removed;
      continue;
    }
    kept.push_back(std::move(*certs[i]));
  }

  const auto& p = loc.problem();
  std::vector<Vector> values;
  values.reserve(kept.size());
  for (const auto& c : kept) values.push_back(p.h().evaluate(c.x_eps));
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < kept.size() && !dominated; ++j)
      dominated = j != i && p.order_cone().dominates(values[j] - values[i], dominance_tol);
    if (dominated)
      ++result.dominated_removed;
    else
      order.push_back(i);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return lexicographic_less(values[a], values[b]); });
  for (std::size_t i : order) result.certificates.push_back(std::move(kept[i]));
  return result;
}

const CheckResult* CheckReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

CheckReport check_certificate(const Localization& loc, const SolutionCertificate& cert,
                              int n_samples, std::uint64_t seed, double tol, int threads) {
  const auto& p = loc.problem();
  CheckReport report;
  const double gap = std::abs((cert.x_eps - loc.x0()).norm() - loc.eps()) / loc.eps();
  report.checks.push_back({"boundary", gap, tol, gap <= tol, std::nullopt});

  // Membership in K+ and nonvanishing of w*.
  const double dual = p.order_cone().dual_violation(cert.w_star);
  const bool nonzero = cert.w_star.norm() >= 1e-6;
  report.checks.push_back({"dual_cone", dual, tol, p.order_cone().dual_contains(cert.w_star, tol) && nonzero,
                           std::nullopt});

  report.checks.push_back(normal_cone_check(p, cert.x_eps, cert.y_star, tol));
  report.checks.push_back(
      lagrangian_maximality(loc, cert.x_eps, cert.w_star, cert.y_star, n_samples, seed, tol, threads));
  if (p.constraint().is_cone()) {
    const double comp = std::abs(cert.y_star.dot(p.g().evaluate(cert.x_eps)));
    report.checks.push_back({"complementarity", comp, tol, comp <= tol, std::nullopt});
  }
  report.pass = std::all_of(report.checks.begin(), report.checks.end(),
                            [](const CheckResult& c) { return c.pass; });
  return report;
}

NonoptimalityVerdict check_nonoptimality_of_center(const Localization& loc, int n_samples,
                                                   std::uint64_t seed, double tol, int threads) {
  const auto openness = calculus::surjectivity_check(image_map(loc.problem(), loc.x0()), loc.x0());
  if (!openness.surjective)
    fail(Error::Kind::precondition, "the image map is not onto at x0");
  const auto search = search_dominating(loc, loc.x0(), n_samples, seed, tol, threads);
  NonoptimalityVerdict v;
  v.n_feasible = search.n_feasible;
  if (search.witness) {
    v.status = NonoptimalityVerdict::Status::witness_found;
    v.witness = search.witness;
    v.gain = search.gain;
  }
  return v;
}

SufficiencyReport check_sufficiency(const Localization& loc, const Vector& z, const Vector& w_star,
                                    const Vector& y_star, int n_samples, std::uint64_t seed,
                                    double tol, double tol_strict, int threads) {
  const auto& p = loc.problem();
  if (!loc.ball().contains(z, 1e-12 * (1.0 + loc.eps())))
    fail(Error::Kind::precondition, "z is outside B(x0, eps)");
  SufficiencyReport report;
  auto& checks = report.conditions.checks;

  const Matrix& gens = p.order_cone().generators();
  double weakest = std::numeric_limits<double>::infinity();
  for (Eigen::Index j = 0; j < gens.cols(); ++j)
    weakest = std::min(weakest, w_star.dot(gens.col(j)) / gens.col(j).norm());
  checks.push_back({"strict_positivity", weakest, tol_strict, weakest >= tol_strict, std::nullopt});
  checks.push_back(normal_cone_check(p, z, y_star, tol));
  checks.push_back(lagrangian_maximality(loc, z, w_star, y_star, n_samples, seed, tol, threads));
  report.sufficient = std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
  report.conditions.pass = report.sufficient;

  if (p.infeasibility(z) <= tol)
    report.cross_validation = check_local_optimality(loc, z, n_samples, seed, tol, threads);
  return report;
}

OracleResult brute_force_oracle(const Localization& loc, int grid_density) {
  const auto& p = loc.problem();
  const int d = p.domain_dim();
  if (d > 4) fail(Error::Kind::dimension_guard, "brute-force oracle supports at most 4 variables");
  if (grid_density < 2) fail(Error::Kind::validation, "grid density must be >= 2");

  OracleResult out;
  out.pitch = 2.0 * loc.eps() / (grid_density - 1);
  // Every feasible point has a grid neighbor within sqrt(d) pitch / 2.
  out.feasibility_tol =
      0.5 * std::sqrt(static_cast<double>(d)) * out.pitch * operator_norm(p.g().jacobian(loc.x0())) + 1e-12;

  std::vector<Vector> xs;
  std::vector<Vector> hs;
  std::vector<int> idx(static_cast<std::size_t>(d), 0);
  Vector x(d);
  const double limit = loc.eps() * (1.0 + 1e-12);
  while (true) {
    for (int k = 0; k < d; ++k) x(k) = loc.x0()(k) - loc.eps() + out.pitch * idx[static_cast<std::size_t>(k)];
    if ((x - loc.x0()).norm() <= limit) {
      ++out.n_grid_in_ball;
      if (p.infeasibility(x) <= out.feasibility_tol) {
        xs.push_back(x);
        hs.push_back(p.h().evaluate(x));
      }
    }
    int k = 0;
    while (k < d && ++idx[static_cast<std::size_t>(k)] == grid_density) idx[static_cast<std::size_t>(k++)] = 0;
    if (k == d) break;
  }
  out.n_feasible = static_cast<long long>(xs.size());

  // Weak frontier in dual-generator coordinates: drop a point only when some
  // other point improves every coordinate. A Pareto dominator of any point is
  // then still matched by a kept point, and the kept set stays dense where the
  // frontier runs parallel to a generator. A strict dominator has a larger
  // coordinate sum, so scanning by decreasing sum only needs the kept set.
  const Matrix& dual = p.order_cone().dual_generators();
  std::vector<Vector> zs(xs.size());
  std::vector<double> sums(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    zs[i] = dual.transpose() * hs[i];
    sums[i] = zs[i].sum();
  }
  std::vector<std::size_t> order(xs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sums[a] > sums[b]; });
  std::vector<std::size_t> frontier;
  for (std::size_t i : order) {
    const bool dominated = std::any_of(frontier.begin(), frontier.end(), [&](std::size_t j) {
      const Vector diff = zs[j] - zs[i];
      return diff.minCoeff() > 0.0;
    });
    if (!dominated) frontier.push_back(i);
  }
  std::sort(frontier.begin(), frontier.end());
  for (std::size_t i : frontier) {
    out.points.push_back(xs[i]);
    out.objectives.push_back(hs[i]);
  }
  return out;
}

}  // namespace locprog::vopt
