#pragma once

#include "locprog/linalg.hpp"

#include <string>

namespace locprog::spaces {

enum class NormKind { euclidean, p_norm };

/// A finite-dimensional normed space together with the data of its modulus
/// of convexity. Euclidean spaces are Hilbert spaces; p-norm spaces with
/// 1 < p < 2 are carried for modulus diagnostics only.
class SpaceSpec {
 public:
  static SpaceSpec euclidean(int dimension, std::string label = {});
  static SpaceSpec p_norm(int dimension, double p, std::string label = {});

  int dimension() const noexcept { return dimension_; }
  NormKind norm_kind() const noexcept { return kind_; }
  /// Exponent of the norm; 2 for euclidean spaces.
  double p() const noexcept { return p_; }
  const std::string& label() const noexcept { return label_; }

  double norm(const Vector& x) const;

  bool operator==(const SpaceSpec&) const = default;

 private:
  SpaceSpec(int dimension, NormKind kind, double p, std::string label);

  int dimension_;
  NormKind kind_;
  double p_;
  std::string label_;
};

/// Closed ball B(center, radius) measured in the norm of `space`.
struct Ball {
  SpaceSpec space;
  Vector center;
  double radius;

  Ball(SpaceSpec space, Vector center, double radius);
  /// Euclidean ball of the dimension of `center`.
  Ball(Vector center, double radius);

  bool contains(const Vector& x, double slack = 0.0) const;
};

/// X^n with the 2-norm of the direct sum.
class ProductSpaceSpec {
 public:
  ProductSpaceSpec(SpaceSpec base, int copies);

  const SpaceSpec& base() const noexcept { return base_; }
  int copies() const noexcept { return copies_; }
  int dimension() const noexcept { return base_.dimension() * copies_; }

  /// (sum_i ||x_i||^2)^{1/2} for x stacked as (x_1, ..., x_n).
  double norm(const Vector& stacked) const;

 private:
  SpaceSpec base_;
  int copies_;
};

/// delta_X(eps). Exact for euclidean spaces; for p-norm spaces returns the
/// lower bound (p-1)/8 eps^2, which is not the exact modulus.
double modulus_of_convexity(const SpaceSpec& space, double eps);

/// kappa with modulus_of_convexity(space, eps) >= kappa eps^2 on [0, 2].
double quadratic_growth_constant(const SpaceSpec& space);

/// Upper estimate 1 - sqrt(1 - eps^2/4) valid for every space of dimension > 1.
double nordlander_bound(double eps);

/// Nearest point of the ball. Radial projection is a nearest point in every
/// norm: ||x - r x/||x|| || = ||x|| - r, the triangle-inequality lower bound.
Vector project_to_ball(const Ball& ball, const Vector& point);

}  // namespace locprog::spaces
