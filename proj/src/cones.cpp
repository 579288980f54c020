#include "locprog/cones.hpp"

#include "locprog/error.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace locprog::vopt {

namespace {

void add_unique(std::vector<Vector>& rays, Vector v) {
  v.normalize();
  for (const auto& r : rays)
    if ((r - v).norm() < 1e-9) return;
  rays.push_back(std::move(v));
}

Matrix to_matrix(const std::vector<Vector>& cols, Eigen::Index rows) {
  Matrix m(rows, static_cast<Eigen::Index>(cols.size()));
  for (std::size_t i = 0; i < cols.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = cols[i];
  return m;
}

/// Extreme rays of {w : G'w >= 0} plus both signs of its lineality space.
Matrix enumerate_dual_generators(const Matrix& g) {
  const Eigen::Index m = g.rows();
  const Matrix span = column_space_basis(g);
  const Eigen::Index s = span.cols();
  const Matrix reduced = span.transpose() * g;  // s x k, full row rank
  const Eigen::Index k = g.cols();
  std::vector<Vector> rays;

  auto consider = [&](const Vector& a) {
    for (double sign : {1.0, -1.0}) {
      const Vector cand = sign * a;
      if ((reduced.transpose() * cand).minCoeff() >= -1e-10 * std::max(1.0, reduced.norm()))
        add_unique(rays, span * cand);
    }
  };

  if (s == 1) {
    consider(Vector::Ones(1));
  } else {
    // Every extreme ray is orthogonal to s-1 independent generators.
    std::vector<Eigen::Index> subset(static_cast<std::size_t>(s - 1));
    std::function<void(Eigen::Index, Eigen::Index)> recurse = [&](Eigen::Index start, Eigen::Index depth) {
      if (depth == s - 1) {
        Matrix rows(s - 1, s);
        for (Eigen::Index r = 0; r < s - 1; ++r) rows.row(r) = reduced.col(subset[static_cast<std::size_t>(r)]).transpose();
        Eigen::JacobiSVD<Matrix> svd(rows, Eigen::ComputeFullV);
        const Vector& sv = svd.singularValues();
        if (sv.size() == s - 1 && sv(s - 2) <= 1e-10 * std::max(1.0, sv(0))) return;
        consider(svd.matrixV().col(s - 1));
        return;
      }
      for (Eigen::Index j = start; j < k; ++j) {
        subset[static_cast<std::size_t>(depth)] = j;
        recurse(j + 1, depth + 1);
      }
    };
    recurse(0, 0);
  }
  const Matrix complement = orthogonal_complement(g);
  for (Eigen::Index c = 0; c < complement.cols(); ++c) {
    add_unique(rays, complement.col(c));
    add_unique(rays, -complement.col(c));
  }
  return to_matrix(rays, m);
}

}  // namespace

ConeSpec::ConeSpec(Kind kind, Matrix generators) : kind_(kind), generators_(std::move(generators)) {}

ConeSpec ConeSpec::nonneg_orthant(int dim) {
  if (dim < 1) fail(Error::Kind::validation, "cone dimension must be >= 1");
  ConeSpec cone(Kind::nonneg_orthant, Matrix::Identity(dim, dim));
  cone.dual_generators_ = Matrix::Identity(dim, dim);
  return cone;
}

ConeSpec ConeSpec::polyhedral(Matrix generators) {
  if (generators.rows() < 1 || generators.cols() < 1)
    fail(Error::Kind::validation, "polyhedral cone needs at least one generator");
  for (Eigen::Index j = 0; j < generators.cols(); ++j)
    if (generators.col(j).norm() == 0.0) fail(Error::Kind::validation, "K has a zero generator");
  // Pointed iff no generator has its negative in the cone.
  for (Eigen::Index j = 0; j < generators.cols(); ++j) {
    const Vector neg = -generators.col(j);
    const auto fit = nnls(generators, neg);
    if (fit.residual_norm <= 1e-9 * neg.norm()) fail(Error::Kind::validation, "K not pointed");
  }
  ConeSpec cone(Kind::polyhedral, generators);
  cone.dual_generators_ = enumerate_dual_generators(generators);
  return cone;
}

bool ConeSpec::dual_contains(const Vector& w, double tol) const {
  for (Eigen::Index j = 0; j < generators_.cols(); ++j)
    if (w.dot(generators_.col(j)) < -tol * generators_.col(j).norm()) return false;
  return true;
}

double ConeSpec::dual_violation(const Vector& w) const {
  double worst = 0.0;
  for (Eigen::Index j = 0; j < generators_.cols(); ++j)
    worst = std::max(worst, -w.dot(generators_.col(j)) / generators_.col(j).norm());
  return worst;
}

bool ConeSpec::contains(const Vector& d, double tol) const {
  return (dual_generators_.transpose() * d).minCoeff() >= -tol;
}

Vector ConeSpec::project(const Vector& v) const {
  if (kind_ == Kind::nonneg_orthant) return v.cwiseMax(0.0);
  return generators_ * nnls(generators_, v).solution;
}

bool ConeSpec::dominates(const Vector& d, double margin) const {
  const Vector z = dual_generators_.transpose() * d;
  return z.minCoeff() >= -1e-12 * (1.0 + d.norm()) && z.maxCoeff() > margin;
}

ConstraintSet ConstraintSet::singleton_zero(int dim) {
  if (dim < 1) fail(Error::Kind::validation, "constraint dimension must be >= 1");
  return ConstraintSet(Kind::singleton_zero, dim);
}

ConstraintSet ConstraintSet::cone(ConeSpec cone) {
  ConstraintSet set(Kind::cone, cone.ambient_dim());
  set.cone_ = std::move(cone);
  return set;
}

ConstraintSet ConstraintSet::box(Vector lo, Vector hi) {
  if (lo.size() != hi.size() || lo.size() < 1) fail(Error::Kind::validation, "box bounds must have equal positive length");
  for (Eigen::Index i = 0; i < lo.size(); ++i)
    if (!(lo(i) <= hi(i))) fail(Error::Kind::validation, "box needs lo <= hi");
  ConstraintSet set(Kind::box, static_cast<int>(lo.size()));
  set.lo_ = std::move(lo);
  set.hi_ = std::move(hi);
  return set;
}

ConstraintSet ConstraintSet::ball(Vector center, double radius) {
  if (center.size() < 1) fail(Error::Kind::validation, "ball center must be nonempty");
  if (!(radius >= 0.0)) fail(Error::Kind::validation, "ball radius must be nonnegative");
  ConstraintSet set(Kind::ball, static_cast<int>(center.size()));
  set.lo_ = std::move(center);
  set.radius_ = radius;
  return set;
}

Vector ConstraintSet::project(const Vector& y) const {
  if (y.size() != dim_) fail(Error::Kind::domain, "constraint set: vector has wrong dimension");
  switch (kind_) {
    case Kind::singleton_zero:
      return Vector::Zero(dim_);
    case Kind::cone:
      return cone_->project(y);
    case Kind::box:
      return y.cwiseMax(lo_).cwiseMin(hi_);
    case Kind::ball:
      return spaces::project_to_ball(spaces::Ball(lo_, radius_), y);
  }
  return y;
}

Matrix ConstraintSet::normal_cone_generators(const Vector& p, double active_tol) const {
  std::vector<Vector> cols;
  const Eigen::Index n = dim_;
  auto unit = [n](Eigen::Index i, double sign) {
    Vector e = Vector::Zero(n);
    e(i) = sign;
    return e;
  };
  switch (kind_) {
    case Kind::singleton_zero:
      for (Eigen::Index i = 0; i < n; ++i) {
        cols.push_back(unit(i, 1.0));
        cols.push_back(unit(i, -1.0));
      }
      break;
    case Kind::cone: {
      // N_C(p) = {-v : v in C+, <v, p> = 0}.
      const Matrix& dual = cone_->dual_generators();
      const double scale = active_tol * (1.0 + p.norm());
      for (Eigen::Index j = 0; j < dual.cols(); ++j)
        if (std::abs(dual.col(j).dot(p)) <= scale) cols.push_back(-dual.col(j));
      break;
    }
    case Kind::box:
      for (Eigen::Index i = 0; i < n; ++i) {
        const double width = hi_(i) - lo_(i);
        const double tol = active_tol * (1.0 + std::abs(p(i)));
        if (width <= tol) {
          cols.push_back(unit(i, 1.0));
          cols.push_back(unit(i, -1.0));
        } else if (p(i) >= hi_(i) - tol) {
          cols.push_back(unit(i, 1.0));
        } else if (p(i) <= lo_(i) + tol) {
          cols.push_back(unit(i, -1.0));
        }
      }
      break;
    case Kind::ball: {
      const Vector offset = p - lo_;
      if (radius_ == 0.0) {
        for (Eigen::Index i = 0; i < n; ++i) {
          cols.push_back(unit(i, 1.0));
          cols.push_back(unit(i, -1.0));
        }
      } else if (offset.norm() >= radius_ * (1.0 - active_tol)) {
        cols.push_back(offset / offset.norm());
      }
      break;
    }
  }
  return to_matrix(cols, n);
}

double ConstraintSet::normal_cone_violation(const Vector& p, const Vector& v, double t) const {
  const Vector base = project(p);
  return (project(base + t * v) - base).norm() / t;
}

}  // namespace locprog::vopt
