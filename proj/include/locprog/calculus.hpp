#pragma once

#include "locprog/linalg.hpp"
#include "locprog/spaces.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace locprog::calculus {

/// Open box lo < x < hi; infinite bounds describe an unbounded direction.
struct Region {
  Vector lo;
  Vector hi;

  static Region unbounded(int dim);
  static Region box(Vector lo, Vector hi);

  int dim() const noexcept { return static_cast<int>(lo.size()); }
  bool contains(const Vector& x) const;
  /// Closed euclidean ball B(center, radius) lies in the open box.
  bool contains_ball(const Vector& center, double radius) const;
  Region intersect(const Region& other) const;
};

/// One node of a map expression. Nodes are immutable and shared.
class MapExpr {
 public:
  virtual ~MapExpr() = default;
  virtual int domain_dim() const = 0;
  virtual int codomain_dim() const = 0;
  virtual Vector eval(const Vector& x) const = 0;
  /// Analytic Jacobian, or nullopt when the node has none.
  virtual std::optional<Matrix> jacobian(const Vector& x) const = 0;
  virtual bool has_analytic_jacobian() const = 0;
  virtual std::string name() const = 0;
};

enum class JacobianSource { analytic, central_difference };

/// A C^1 map on an open box region with Jacobian access.
class SmoothMap {
 public:
  using EvalFn = std::function<Vector(const Vector&)>;
  using JacobianFn = std::function<Matrix(const Vector&)>;

  explicit SmoothMap(std::shared_ptr<const MapExpr> expr);
  SmoothMap(std::shared_ptr<const MapExpr> expr, Region region);

  /// Map defined by code rather than by the catalog. Without `jacobian` the
  /// derivative is taken by central differences.
  static SmoothMap from_functions(int domain_dim, int codomain_dim, EvalFn eval,
                                  JacobianFn jacobian = {}, std::string name = "function");

  int domain_dim() const { return expr_->domain_dim(); }
  int codomain_dim() const { return expr_->codomain_dim(); }
  JacobianSource jacobian_source() const {
    return expr_->has_analytic_jacobian() ? JacobianSource::analytic : JacobianSource::central_difference;
  }
  const Region& region() const noexcept { return region_; }
  const std::shared_ptr<const MapExpr>& expr() const noexcept { return expr_; }
  std::string name() const { return expr_->name(); }

  SmoothMap with_region(Region region) const;

  /// f(x); domain error outside the region.
  Vector evaluate(const Vector& x) const;
  /// Analytic Jacobian when available, else central differences.
  Matrix jacobian(const Vector& x) const;
  /// Central differences with step cbrt(machine eps) * max(1, |x_j|).
  Matrix central_difference_jacobian(const Vector& x) const;
  /// Scalar maps only: the gradient (transposed Jacobian row).
  Vector gradient(const Vector& x) const;

 private:
  void check_domain(const Vector& x) const;

  std::shared_ptr<const MapExpr> expr_;
  Region region_;
};

// Built-in catalog. Every entry carries an analytic Jacobian.

/// x -> A x + b.
SmoothMap affine(Matrix a, Vector b);
SmoothMap linear(Matrix a);
SmoothMap identity(int dim);
/// x -> x'Qx + a'x + c (scalar).
SmoothMap quadratic(Matrix q, Vector a, double c);
/// x_i -> sum_k coeffs[i][k] x_i^k, degree at most 4 per component.
SmoothMap polynomial(std::vector<std::array<double, 5>> coeffs);
/// x -> log(1 + exp(a'x + b)) (scalar).
SmoothMap logsum(Vector a, double b = 0.0);
/// (x, y) -> ((1 + x) cos y, (1 + x) sin y).
SmoothMap polar();
/// x -> outer(inner(x)).
SmoothMap compose(const SmoothMap& outer, const SmoothMap& inner);
/// x -> (f_1(x), ..., f_k(x)); all parts share the domain.
SmoothMap stack(const std::vector<SmoothMap>& parts);
/// x -> c f(x).
SmoothMap scale(const SmoothMap& f, double c);
/// x -> f(x) + b.
SmoothMap translate(const SmoothMap& f, const Vector& b);

struct JacobianCheck {
  double max_abs_error = 0.0;
  bool pass = false;
};

/// Entrywise comparison of the analytic Jacobian against central differences.
JacobianCheck check_jacobian(const SmoothMap& map, const Vector& x, double tol);

/// Constructive stand-in for openness at a linear rate around x: sigma is the
/// smallest singular value of Df(x). The neighborhood constants of the
/// openness inclusion are not estimated.
struct OpennessEstimate {
  double sigma = 0.0;
  double smallest_singular_value = 0.0;
  double largest_singular_value = 0.0;
  double rank_tolerance = 0.0;
  bool surjective = false;
  Vector point;
};

/// Lyusternik-Graves test: Df(x) onto iff its smallest singular value
/// exceeds rank_tol (default 1e-8 * sigma_max).
OpennessEstimate surjectivity_check(const SmoothMap& map, const Vector& x,
                                    std::optional<double> rank_tol = std::nullopt);

/// Lower estimate of the Lipschitz constant of Df on the ball from
/// consecutive pairs of a seeded sample sequence. Sample sets are nested in
/// n_samples for a fixed seed, so the estimate is nondecreasing in n_samples.
double estimate_derivative_lipschitz(const SmoothMap& map, const spaces::Ball& ball, int n_samples,
                                     std::uint64_t seed);

}  // namespace locprog::calculus
