#pragma once

#include "locprog/calculus.hpp"

#include <cstdint>
#include <optional>
#include <utility>

namespace locprog::convexity {

struct ConvexityOptions {
  int n_pairs = 2000;
  std::uint64_t seed = 0;
  /// Inner inverse-image solves stop once ||f(x) - m|| <= inner_tol.
  double inner_tol = 1e-10;
  /// Pass threshold on the worst midpoint residual (codomain units).
  double tol = 1e-6;
  int max_inner_iterations = 200;
  int threads = 1;
};

/// Midpoint-inclusion test of convexity of f(B(x0, eps)).
struct ConvexityReport {
  double eps = 0.0;
  double worst_midpoint_residual = 0.0;
  int n_pairs = 0;
  double tolerance = 0.0;
  std::uint64_t seed = 0;
  bool pass = false;
  int stalled_pairs = 0;
  /// Present iff the report fails; the worst pair, lowest index on ties.
  std::optional<std::pair<Vector, Vector>> witness_pair;
  std::optional<std::size_t> witness_index;
};

/// For sampled pairs (x1, x2) in the ball, measures the distance from
/// (f(x1) + f(x2)) / 2 to f(B(x0, eps)) by a multi-start inverse solve.
/// Throws precondition if Df(x0) is not onto, solver_stall if more than 1%
/// of the inner solves exhaust their iteration budget.
ConvexityReport midpoint_convexity_residual(const calculus::SmoothMap& map, const Vector& x0, double eps,
                                            const ConvexityOptions& options = {});

struct RadiusEstimate {
  double radius = 0.0;
  /// No failing radius found up to eps_max.
  bool unbounded_in_window = false;
  int n_pairs = 0;
  std::uint64_t seed = 0;
  int evaluations = 0;
  /// Smallest radius observed to fail (absent when unbounded).
  std::optional<double> failing_radius;
};

/// Bisection on the pass/fail predicate. The returned radius passed, and
/// 1.05 times it failed or exceeded eps_max.
RadiusEstimate estimate_convexity_radius(const calculus::SmoothMap& map, const Vector& x0, double eps_max,
                                         double tol, std::uint64_t seed, int n_pairs = 2000, int threads = 1);

struct BoundaryPreimageReport {
  double max_interior_gap = 0.0;  ///< max (eps - ||x_hat - x0||) / eps over probes
  int n_probes = 0;
  bool pass = false;
};

/// Support-function probes: maximizers of <d, f(x)> over the ball must lie
/// on its sphere, up to relative tolerance tol.
BoundaryPreimageReport boundary_preimage_check(const calculus::SmoothMap& map, const Vector& x0, double eps,
                                               int n_boundary_samples, std::uint64_t seed, double tol,
                                               int threads = 1);

}  // namespace locprog::convexity
