#include "locprog/convexity.hpp"

#include "locprog/error.hpp"
#include "locprog/optim.hpp"
#include "locprog/parallel.hpp"
#include "locprog/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

namespace locprog::convexity {

namespace {

void require_regular_center(const calculus::SmoothMap& map, const Vector& x0, double eps) {
  if (!(eps > 0.0)) fail(Error::Kind::precondition, "radius must be positive");
  if (!map.region().contains_ball(x0, eps))
    fail(Error::Kind::precondition, "ball B(x0, eps) is not inside the region of the map");
  if (!calculus::surjectivity_check(map, x0).surjective)
    fail(Error::Kind::precondition, "derivative at x0 is not onto");
}

Vector sample_endpoint(Rng& rng, const Vector& center, double radius) {
  return uniform01(rng) < 0.5 ? sample_on_sphere(rng, center, radius) : sample_in_ball(rng, center, radius);
}

struct PairOutcome {
  double residual = 0.0;
  bool stalled = false;
};

}  // namespace

ConvexityReport midpoint_convexity_residual(const calculus::SmoothMap& map, const Vector& x0, double eps,
                                            const ConvexityOptions& options) {
  require_regular_center(map, x0, eps);
  if (options.n_pairs < 1) fail(Error::Kind::precondition, "n_pairs must be positive");
  const spaces::Ball ball(x0, eps);
  const auto n = static_cast<std::size_t>(options.n_pairs);

  std::vector<std::pair<Vector, Vector>> pairs;
  pairs.reserve(n);
  Rng rng = make_rng(options.seed, stream::convexity_pairs);
  for (std::size_t i = 0; i < n; ++i) {
    Vector a = sample_endpoint(rng, x0, eps);
    Vector b = sample_endpoint(rng, x0, eps);
    pairs.emplace_back(std::move(a), std::move(b));
  }

  optim::LeastSquaresOptions ls;
  ls.target_residual = options.inner_tol;
  ls.max_iterations = options.max_inner_iterations;

  std::vector<PairOutcome> outcomes(n);
  parallel_for(n, options.threads, [&](std::size_t i) {
    const auto& [a, b] = pairs[i];
    const Vector mid = 0.5 * (map.evaluate(a) + map.evaluate(b));
    Rng start_rng = make_rng(options.seed, stream::convexity_starts, i);
    std::vector<Vector> starts{a, b, 0.5 * (a + b)};
    starts.push_back(sample_in_ball(start_rng, x0, eps));
    starts.push_back(sample_in_ball(start_rng, x0, eps));
    PairOutcome best{std::numeric_limits<double>::infinity(), true};
    for (const auto& s : starts) {
      const auto res = optim::ball_least_squares(map, mid, ball, s, ls);
      if (res.residual < best.residual) best = {res.residual, !res.converged};
      if (best.residual <= options.inner_tol) break;
    }
    outcomes[i] = best;
  });

  ConvexityReport report;
  report.eps = eps;
  report.n_pairs = options.n_pairs;
  report.tolerance = options.tol;
  report.seed = options.seed;
  std::size_t worst = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (outcomes[i].stalled) ++report.stalled_pairs;
    if (outcomes[i].residual > outcomes[worst].residual) worst = i;
  }
  if (report.stalled_pairs * 100 > options.n_pairs) {
    std::ostringstream os;
    os << "inverse-image solve exhausted its iteration budget on " << report.stalled_pairs << " of "
       << options.n_pairs << " pairs";
    fail(Error::Kind::solver_stall, os.str());
  }
  report.worst_midpoint_residual = outcomes[worst].residual;
  report.pass = report.worst_midpoint_residual <= options.tol;
  if (!report.pass) {
    report.witness_pair = pairs[worst];
    report.witness_index = worst;
  }
  return report;
}

RadiusEstimate estimate_convexity_radius(const calculus::SmoothMap& map, const Vector& x0, double eps_max,
                                         double tol, std::uint64_t seed, int n_pairs, int threads) {
  if (!(eps_max > 0.0)) fail(Error::Kind::precondition, "eps_max must be positive");
  ConvexityOptions options;
  options.n_pairs = n_pairs;
  options.seed = seed;
  options.tol = tol;
  options.threads = threads;

  RadiusEstimate est;
  est.n_pairs = n_pairs;
  est.seed = seed;
  auto passes = [&](double eps) {
    ++est.evaluations;
    return midpoint_convexity_residual(map, x0, eps, options).pass;
  };

  if (passes(eps_max)) {
    est.radius = eps_max;
    est.unbounded_in_window = true;
    return est;
  }
  double hi = eps_max;
  double lo = 0.0;
  // Find a passing radius by halving.
  double probe = eps_max / 2.0;
  for (int k = 0; k < 60 && lo == 0.0; ++k) {
    if (passes(probe))
      lo = probe;
    else {
      hi = probe;
      probe /= 2.0;
    }
  }
  if (lo == 0.0) fail(Error::Kind::precondition, "no convex radius found down to eps_max * 2^-60");

  while (true) {
    while (hi > 1.05 * lo) {
      const double mid = std::sqrt(lo * hi);
      if (passes(mid))
        lo = mid;
      else
        hi = mid;
    }
    const double check = 1.05 * lo;
    if (check >= eps_max) break;
    if (check <= hi || !passes(check)) {
      if (check > hi) hi = check;
      break;
    }
    // Non-monotone pass above the bracket: continue from there.
    lo = check;
    hi = eps_max;
  }
  est.radius = lo;
  est.failing_radius = hi;
  return est;
}

BoundaryPreimageReport boundary_preimage_check(const calculus::SmoothMap& map, const Vector& x0, double eps,
                                               int n_boundary_samples, std::uint64_t seed, double tol,
                                               int threads) {
  require_regular_center(map, x0, eps);
  const spaces::Ball ball(x0, eps);
  const auto n = static_cast<std::size_t>(std::max(0, n_boundary_samples));
  std::vector<double> gaps(n, 0.0);
  parallel_for(n, threads, [&](std::size_t k) {
    Rng rng = make_rng(seed, stream::support_probe, k);
    const Vector dir = random_direction(rng, map.codomain_dim());
    const optim::Objective support = [&](const Vector& x, Vector& grad) {
      grad = map.jacobian(x).transpose() * dir;
      return dir.dot(map.evaluate(x));
    };
    std::vector<Vector> starts{x0};
    const Vector ascent = map.jacobian(x0).transpose() * dir;
    if (ascent.norm() > 0.0) starts.push_back(x0 + 0.5 * eps * ascent / ascent.norm());
    starts.push_back(sample_in_ball(rng, x0, eps));
    starts.push_back(sample_in_ball(rng, x0, eps));
    optim::SpgResult best;
    best.value = -std::numeric_limits<double>::infinity();
    for (const auto& s : starts) {
      auto res = optim::spg_maximize(support, ball, s);
      if (res.value > best.value) best = std::move(res);
    }
    gaps[k] = std::max(0.0, eps - (best.x - x0).norm()) / eps;
  });
  BoundaryPreimageReport report;
  report.n_probes = static_cast<int>(n);
  report.max_interior_gap = n ? *std::max_element(gaps.begin(), gaps.end()) : 0.0;
  report.pass = report.max_interior_gap <= tol;
  return report;
}

}  // namespace locprog::convexity
