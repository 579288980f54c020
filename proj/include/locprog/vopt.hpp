#pragma once

#include "locprog/calculus.hpp"
#include "locprog/cones.hpp"
#include "locprog/error.hpp"
#include "locprog/spaces.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace locprog::vopt {

/// Maximize h(x) with respect to the order of K subject to g(x) in C, x in Omega.
class VectorProblem {
 public:
  /// Checks dimensional consistency. The stored region is the intersection of
  /// `region` with the regions of h and g.
  VectorProblem(calculus::SmoothMap h, calculus::SmoothMap g, ConstraintSet c, ConeSpec k,
                calculus::Region region);
  VectorProblem(calculus::SmoothMap h, calculus::SmoothMap g, ConstraintSet c, ConeSpec k);

  const calculus::SmoothMap& h() const noexcept { return h_; }
  const calculus::SmoothMap& g() const noexcept { return g_; }
  const ConstraintSet& constraint() const noexcept { return c_; }
  const ConeSpec& order_cone() const noexcept { return k_; }
  const calculus::Region& region() const noexcept { return region_; }
  int domain_dim() const { return h_.domain_dim(); }
  int objective_dim() const { return h_.codomain_dim(); }
  int constraint_dim() const { return g_.codomain_dim(); }

  double infeasibility(const Vector& x) const { return c_.distance(g_.evaluate(x)); }

 private:
  calculus::SmoothMap h_;
  calculus::SmoothMap g_;
  ConstraintSet c_;
  ConeSpec k_;
  calculus::Region region_;
};

/// The problem restricted to the closed ball B(x0, eps).
class Localization {
 public:
  /// Validation error unless g(x0) lies in C within `feasibility_tol` and the
  /// ball lies inside the region.
  Localization(VectorProblem problem, Vector x0, double eps, double feasibility_tol = 1e-8);

  const VectorProblem& problem() const noexcept { return problem_; }
  const Vector& x0() const noexcept { return x0_; }
  double eps() const noexcept { return eps_; }
  spaces::Ball ball() const { return spaces::Ball(x0_, eps_); }

 private:
  VectorProblem problem_;
  Vector x0_;
  double eps_;
};

struct CertificateResiduals {
  double boundary_gap = 0.0;           ///< | ||x - x0|| - eps | / eps
  double dual_cone_violation = 0.0;    ///< distance-like violation of w* in K+
  double normal_cone_violation = 0.0;  ///< projection test of -y* in N_C(g(x))
  double lagrangian_violation = 0.0;   ///< residual of the stationarity system
  double complementarity_gap = 0.0;    ///< |<y*, g(x)>| when C is a cone, else 0
};

struct SolutionCertificate {
  Vector x_eps;
  Vector w_star;
  Vector y_star;
  Vector scalarization_weights;  ///< normalized to unit l1 norm
  double lambda = 0.0;           ///< multiplier of the ball constraint, after normalization
  double objective_value = 0.0;  ///< <weights, h(x_eps)>
  double infeasibility = 0.0;    ///< dist(g(x_eps), C)
  double stationarity = 0.0;     ///< projected Lagrangian gradient at the end of the solve
  int start_index = 0;           ///< multi-start that produced x_eps
  CertificateResiduals residuals;
};

/// L(w, y; x) = <w, h(x)> + <y, g(x)>.
double lagrangian(const VectorProblem& problem, const Vector& w, const Vector& y, const Vector& x);

/// x -> (h(x) - h(xbar), g(x)).
calculus::SmoothMap image_map(const VectorProblem& problem, const Vector& xbar);

struct LocalOptimalityVerdict {
  enum class Status { optimal_up_to_sampling, dominated };
  Status status = Status::optimal_up_to_sampling;
  std::optional<Vector> witness;
  std::optional<Vector> gain;  ///< h(witness) - h(candidate)
  int n_feasible = 0;
};

/// Samples feasible points of the localization and looks for one whose
/// objective dominates the candidate's by more than `tol`.
LocalOptimalityVerdict check_local_optimality(const Localization& loc, const Vector& candidate,
                                              int n_samples, std::uint64_t seed, double tol,
                                              int threads = 1);

struct SolveConfig {
  int multi_starts = 4;
  int max_iters = 5000;  ///< inner projected-gradient iterations per penalty update
  int max_penalty_updates = 60;
  std::uint64_t seed = 0;
  int threads = 1;
};

/// Maximizes <weights, h(x)> over g(x) in C, x in B(x0, eps) with an
/// augmented Lagrangian on the constraint and multi-start projected gradient
/// ascent, then recovers multipliers at the winner.
SolutionCertificate solve_localization(const Localization& loc, const Vector& weights,
                                       const SolveConfig& config = {});

struct SweepAnnotation {
  std::size_t weight_index = 0;
  Vector weights;
  Error::Kind kind = Error::Kind::non_convergence;
  std::string message;
};

struct SweepResult {
  std::vector<SolutionCertificate> certificates;  ///< sorted lexicographically by h(x_eps)
  std::vector<SweepAnnotation> annotations;       ///< per-weight failures
  int duplicates_removed = 0;
  int dominated_removed = 0;
};

SweepResult pareto_sweep(const Localization& loc, const std::vector<Vector>& weight_grid,
                         const SolveConfig& config = {}, double dominance_tol = 1e-6);

/// Uniform weights on the simplex of R^k with `steps` + 1 points per edge.
/// Two objectives and 10 steps give the 11 weights (i/10, 1 - i/10).
std::vector<Vector> simplex_weight_grid(int objectives, int steps);

struct Multipliers {
  Vector w_star;
  Vector y_star;
  double lambda = 0.0;
  double residual = 0.0;  ///< stationarity residual after normalizing ||(w, y)|| = 1
};

/// Solves grad h' w + grad g' y = lambda n with w in K+, -y in N_C(g(x)),
/// lambda >= 0 and n the outward ball normal by nonnegative least squares.
Multipliers recover_multipliers(const Localization& loc, const Vector& x_eps);

struct CheckResult {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool pass = false;
  std::optional<Vector> witness;
};

struct CheckReport {
  std::vector<CheckResult> checks;
  bool pass = false;

  const CheckResult* find(const std::string& name) const;
};

/// The five conditions: boundary, dual_cone, normal_cone, lagrangian_max and
/// (cones only) complementarity.
CheckReport check_certificate(const Localization& loc, const SolutionCertificate& cert,
                              int n_samples, std::uint64_t seed, double tol, int threads = 1);

struct NonoptimalityVerdict {
  enum class Status { witness_found, inconclusive };
  Status status = Status::inconclusive;
  std::optional<Vector> witness;
  std::optional<Vector> gain;
  int n_feasible = 0;
};

/// Searches for a feasible point of the ball dominating the center. The image
/// map must be onto at x0 (precondition error otherwise).
NonoptimalityVerdict check_nonoptimality_of_center(const Localization& loc, int n_samples,
                                                   std::uint64_t seed, double tol,
                                                   int threads = 1);

struct SufficiencyReport {
  CheckReport conditions;  ///< strict_positivity, normal_cone, lagrangian_max
  bool sufficient = false;
  /// check_local_optimality at z; absent when z is not feasible.
  std::optional<LocalOptimalityVerdict> cross_validation;
};

/// Sufficient conditions at z. Trivial kernel of w* is tested through the
/// surrogate <w*, g_i> >= tol_strict ||g_i|| on every generator g_i of K.
SufficiencyReport check_sufficiency(const Localization& loc, const Vector& z, const Vector& w_star,
                                    const Vector& y_star, int n_samples, std::uint64_t seed,
                                    double tol, double tol_strict = 1e-6, int threads = 1);

struct OracleResult {
  std::vector<Vector> points;      ///< feasible grid points no other grid point strictly improves
  std::vector<Vector> objectives;  ///< h at those points
  double pitch = 0.0;
  double feasibility_tol = 0.0;
  long long n_grid_in_ball = 0;
  long long n_feasible = 0;
};

/// Grid enumeration of B(x0, eps) with `grid_density` points per axis.
/// Dimension-guard error above 4 variables.
OracleResult brute_force_oracle(const Localization& loc, int grid_density);

}  // namespace locprog::vopt
