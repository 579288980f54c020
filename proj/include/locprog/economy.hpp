#pragma once

#include "locprog/calculus.hpp"
#include "locprog/cones.hpp"
#include "locprog/vopt.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace locprog::economy {

/// Consumption set Omega_i: an open box or an open euclidean ball.
class ConsumptionSet {
 public:
  enum class Kind { box, ball };

  static ConsumptionSet box(Vector lo, Vector hi);
  static ConsumptionSet ball(Vector center, double radius);

  Kind kind() const noexcept { return kind_; }
  int dim() const noexcept { return static_cast<int>(lo_.size()); }
  const Vector& lo() const noexcept { return lo_; }
  const Vector& hi() const noexcept { return hi_; }
  const Vector& center() const noexcept { return center_; }
  double radius() const noexcept { return radius_; }

  /// Distance from x to the complement; negative when x is outside.
  double interior_margin(const Vector& x) const;
  /// Closed ball B(x, r) inside the open set.
  bool contains_ball(const Vector& x, double r) const;
  /// Smallest open box containing the set.
  calculus::Region bounding_region() const;

 private:
  Kind kind_ = Kind::box;
  Vector lo_;
  Vector hi_;
  Vector center_;
  double radius_ = 0.0;
};

struct Consumer {
  ConsumptionSet set;
  calculus::SmoothMap utility;  ///< R^m -> R
};

/// Exchange economy with n consumers, m goods, aggregate endowment omega and
/// net-demand cone Theta. Allocations are stacked as one vector of R^{nm}.
class Economy {
 public:
  /// Validation errors for inconsistent dimensions, empty interiors, a
  /// non-cone Theta, or n m < n + m (no allocation can be regular).
  Economy(std::vector<Consumer> consumers, Vector endowment, vopt::ConstraintSet theta);

  int n_consumers() const noexcept { return static_cast<int>(consumers_.size()); }
  int n_goods() const noexcept { return static_cast<int>(endowment_.size()); }
  int allocation_dim() const noexcept { return n_consumers() * n_goods(); }
  const std::vector<Consumer>& consumers() const noexcept { return consumers_; }
  const Vector& endowment() const noexcept { return endowment_; }
  const vopt::ConstraintSet& theta() const noexcept { return theta_; }

  /// Bundle of consumer i inside a stacked allocation.
  Vector bundle(const Vector& allocation, int i) const;
  Vector stack(const std::vector<Vector>& bundles) const;

 private:
  std::vector<Consumer> consumers_;
  Vector endowment_;
  vopt::ConstraintSet theta_;
};

/// Theta = {0}.
vopt::ConstraintSet theta_zero(int goods);
/// Theta = -R^m_+ (free disposal).
vopt::ConstraintSet theta_neg_orthant(int goods);

/// c(x) = sum_i x_i - omega.
calculus::SmoothMap feasibility_map(const Economy& economy);
/// x -> (u_1(x_1), ..., u_n(x_n)).
calculus::SmoothMap stacked_utilities(const Economy& economy);
/// D(u, c)(x) as an (n + m) x (n m) matrix.
Matrix stacked_derivative(const Economy& economy, const Vector& allocation);

/// h = stacked utilities, g = c, C = Theta, K = R^n_+ on the product of the
/// consumption sets (bounding boxes for ball-shaped sets).
vopt::VectorProblem as_vector_problem(const Economy& economy);

/// Feasibility residual dist(c(x), Theta) and membership of every bundle.
bool is_feasible(const Economy& economy, const Vector& allocation, double tol);

struct RegularityVerdict {
  bool regular = false;
  double sigma_min = 0.0;
  double interior_margin = 0.0;  ///< smallest margin over consumers
  std::optional<double> determinant;  ///< when D(u, c)(x) is square
  std::string reason;                 ///< empty when regular
};

RegularityVerdict check_regular(const Economy& economy, const Vector& allocation,
                                std::optional<double> rank_tol = std::nullopt);

struct ParetoResult {
  Vector allocation;
  vopt::SolutionCertificate certificate;
};

/// Solves the localized welfare problem through vopt::solve_localization.
/// Precondition errors when x0 is not regular or the ball leaves some Omega_i.
ParetoResult localized_pareto(const Economy& economy, const Vector& x0, double eps,
                              const Vector& weights, const vopt::SolveConfig& config = {});

struct EquilibriumResiduals {
  double positivity = 0.0;                ///< projection test of p in N_Theta(c(x))
  double market_clearing = 0.0;           ///< |<p, c(x)>|
  double distribution_consistency = 0.0;  ///< |sum_i <p, omega_i> - <p, omega>|
  double individual_optimality = 0.0;     ///< max_i |<p, x_i> - <p, omega_i>|
};

struct EquilibriumCertificate {
  Vector allocation;
  Vector reference;  ///< center x0 of the localization
  Vector price;
  std::vector<Vector> distribution;
  std::vector<double> radii;
  Vector weights;  ///< mu, the recovered objective multiplier
  int normalizing_index = 0;
  EquilibriumResiduals residuals;
};

/// Price p = -y* / mu_j with j = argmax mu, default distribution omega_i = x_i.
EquilibriumCertificate build_equilibrium(const Economy& economy, const Vector& x0,
                                         const ParetoResult& result);

/// Recomputes the residuals of a certificate, e.g. after replacing the price
/// or the distribution.
EquilibriumResiduals equilibrium_residuals(const Economy& economy, const EquilibriumCertificate& cert);

struct ConsumerAudit {
  int budget_samples = 0;
  int violations = 0;  ///< samples with u_i(z) > u_i(x_i) + tol
  double max_gain = 0.0;
  std::optional<Vector> witness;
};

struct EquilibriumReport {
  vopt::CheckReport checks;
  std::vector<ConsumerAudit> consumers;
};

/// Checks positivity, market clearing, distribution consistency, and for
/// every consumer budget exactness and sampled individual optimality on
/// B(x0_i, eta_i).
EquilibriumReport verify_equilibrium(const Economy& economy, const EquilibriumCertificate& cert,
                                     int n_samples, std::uint64_t seed, double tol, int threads = 1);

struct SearchVerdict {
  bool witness_found = false;
  std::optional<Vector> witness;
  double value = 0.0;  ///< utility gain (A6) or budget undercut (A5) at the witness
};

/// Local non-satiation relative to `subset`: looks for z in B(x_i, eps) and
/// the subset with u_i(z) > u_i(x_i). Empty-intersection error when some
/// ball misses the subset.
std::vector<SearchVerdict> check_nonsatiation(const Economy& economy, const Vector& allocation,
                                              double eps, const calculus::Region& subset,
                                              int n_samples, std::uint64_t seed, int threads = 1);

/// Local qualification: looks for z in B(x_i, eps) with
/// <p, z> <= <p, omega_i> - margin. Precondition error for p = 0.
std::vector<SearchVerdict> check_a5(const Economy& economy, const Vector& allocation,
                                    const Vector& price, const std::vector<Vector>& distribution,
                                    double eps, int n_samples, std::uint64_t seed, double margin);

}  // namespace locprog::economy
