#pragma once

#include "locprog/linalg.hpp"
#include "locprog/spaces.hpp"

#include <optional>

namespace locprog::vopt {

/// Closed convex pointed cone, either the nonnegative orthant or the conic
/// hull of the columns of a generator matrix.
class ConeSpec {
 public:
  enum class Kind { nonneg_orthant, polyhedral };

  static ConeSpec nonneg_orthant(int dim);
  /// Columns of `generators` span the cone. Throws validation if not pointed.
  static ConeSpec polyhedral(Matrix generators);

  Kind kind() const noexcept { return kind_; }
  int ambient_dim() const noexcept { return static_cast<int>(generators_.rows()); }
  const Matrix& generators() const noexcept { return generators_; }
  /// Unit-norm generators of the dual cone K+ (lineality directions of K+
  /// appear with both signs).
  const Matrix& dual_generators() const noexcept { return dual_generators_; }

  /// w in K+ iff <w, g_i> >= -tol ||g_i|| for every generator.
  bool dual_contains(const Vector& w, double tol) const;
  /// Largest violation max_i(-<w, g_i>/||g_i||, 0).
  double dual_violation(const Vector& w) const;
  /// d in K iff <v_j, d> >= -tol for all dual generators.
  bool contains(const Vector& d, double tol) const;
  Vector project(const Vector& v) const;

  /// d in K \ {0} with margin: min_j <v_j, d> >= 0 and max_j <v_j, d> > margin.
  bool dominates(const Vector& d, double margin) const;

 private:
  ConeSpec(Kind kind, Matrix generators);

  Kind kind_;
  Matrix generators_;
  Matrix dual_generators_;
};

/// Constraint set C in Y, with membership, projection and normal-cone oracles.
class ConstraintSet {
 public:
  enum class Kind { singleton_zero, cone, box, ball };

  static ConstraintSet singleton_zero(int dim);
  static ConstraintSet cone(ConeSpec cone);
  static ConstraintSet box(Vector lo, Vector hi);
  static ConstraintSet ball(Vector center, double radius);

  Kind kind() const noexcept { return kind_; }
  int ambient_dim() const noexcept { return dim_; }
  /// Cones with apex at the origin: {0} and cone(K).
  bool is_cone() const noexcept { return kind_ == Kind::singleton_zero || kind_ == Kind::cone; }
  const std::optional<ConeSpec>& cone_spec() const noexcept { return cone_; }
  const Vector& lo() const noexcept { return lo_; }
  const Vector& hi() const noexcept { return hi_; }
  const Vector& center() const noexcept { return lo_; }
  double radius() const noexcept { return radius_; }

  Vector project(const Vector& y) const;
  double distance(const Vector& y) const { return (y - project(y)).norm(); }
  bool contains(const Vector& y, double tol) const { return distance(y) <= tol; }

  /// Columns generating N_C(p) as a cone (subspace directions with both
  /// signs). `active_tol` decides which constraints are active at p.
  Matrix normal_cone_generators(const Vector& p, double active_tol = 1e-7) const;

  /// Projection characterization of v in N_C(p): ||P_C(p + t v) - p|| / t.
  /// Zero exactly when v is normal for t small enough.
  double normal_cone_violation(const Vector& p, const Vector& v, double t = 1e-4) const;

 private:
  ConstraintSet(Kind kind, int dim) : kind_(kind), dim_(dim) {}

  Kind kind_;
  int dim_;
  std::optional<ConeSpec> cone_;
  Vector lo_;
  Vector hi_;
  double radius_ = 0.0;
};

}  // namespace locprog::vopt
