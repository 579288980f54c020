#include "locprog/calculus.hpp"

#include "locprog/error.hpp"
#include "locprog/random.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace locprog::calculus {

namespace {

std::string dims_message(const char* what, Eigen::Index got, Eigen::Index want) {
  std::ostringstream os;
  os << what << ": got dimension " << got << ", expected " << want;
  return os.str();
}

class AffineExpr final : public MapExpr {
 public:
  AffineExpr(Matrix a, Vector b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.rows() != b_.size()) fail(Error::Kind::validation, "affine map: rows of A must match length of b");
    if (a_.rows() < 1 || a_.cols() < 1) fail(Error::Kind::validation, "affine map: A must be nonempty");
  }
  int domain_dim() const override { return static_cast<int>(a_.cols()); }
  int codomain_dim() const override { return static_cast<int>(a_.rows()); }
  Vector eval(const Vector& x) const override { return a_ * x + b_; }
  std::optional<Matrix> jacobian(const Vector&) const override { return a_; }
  bool has_analytic_jacobian() const override { return true; }
  std::string name() const override { return "affine"; }

 private:
  Matrix a_;
  Vector b_;
};

class QuadraticExpr final : public MapExpr {
 public:
  QuadraticExpr(Matrix q, Vector a, double c) : q_(std::move(q)), a_(std::move(a)), c_(c) {
    if (q_.rows() != q_.cols()) fail(Error::Kind::validation, "quadratic map: Q must be square");
    if (a_.size() != q_.rows()) fail(Error::Kind::validation, "quadratic map: a must match Q");
    if (q_.rows() < 1) fail(Error::Kind::validation, "quadratic map: Q must be nonempty");
  }
  int domain_dim() const override { return static_cast<int>(q_.rows()); }
  int codomain_dim() const override { return 1; }
  Vector eval(const Vector& x) const override {
    Vector out(1);
    out(0) = x.dot(q_ * x) + a_.dot(x) + c_;
    return out;
  }
  std::optional<Matrix> jacobian(const Vector& x) const override {
    return Matrix(((q_ + q_.transpose()) * x + a_).transpose());
  }
  bool has_analytic_jacobian() const override { return true; }
  std::string name() const override { return "quadratic"; }

 private:
  Matrix q_;
  Vector a_;
  double c_;
};

class PolynomialExpr final : public MapExpr {
 public:
  explicit PolynomialExpr(std::vector<std::array<double, 5>> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) fail(Error::Kind::validation, "polynomial map needs at least one component");
  }
  int domain_dim() const override { return static_cast<int>(coeffs_.size()); }
  int codomain_dim() const override { return static_cast<int>(coeffs_.size()); }
  Vector eval(const Vector& x) const override {
    Vector out(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      const auto& c = coeffs_[static_cast<std::size_t>(i)];
      const double t = x(i);
      out(i) = c[0] + t * (c[1] + t * (c[2] + t * (c[3] + t * c[4])));
    }
    return out;
  }
  std::optional<Matrix> jacobian(const Vector& x) const override {
    Matrix j = Matrix::Zero(x.size(), x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      const auto& c = coeffs_[static_cast<std::size_t>(i)];
      const double t = x(i);
      j(i, i) = c[1] + t * (2.0 * c[2] + t * (3.0 * c[3] + t * 4.0 * c[4]));
    }
    return j;
  }
  bool has_analytic_jacobian() const override { return true; }
  std::string name() const override { return "polynomial"; }

 private:
  std::vector<std::array<double, 5>> coeffs_;
};

class LogSumExpr final : public MapExpr {
 public:
  LogSumExpr(Vector a, double b) : a_(std::move(a)), b_(b) {
    if (a_.size() < 1) fail(Error::Kind::validation, "logsum map: a must be nonempty");
  }
  int domain_dim() const override { return static_cast<int>(a_.size()); }
  int codomain_dim() const override { return 1; }
  Vector eval(const Vector& x) const override {
    const double z = a_.dot(x) + b_;
    Vector out(1);
    out(0) = std::max(z, 0.0) + std::log1p(std::exp(-std::abs(z)));
    return out;
  }
  std::optional<Matrix> jacobian(const Vector& x) const override {
    const double z = a_.dot(x) + b_;
    const double sigmoid = z >= 0.0 ? 1.0 / (1.0 + std::exp(-z)) : std::exp(z) / (1.0 + std::exp(z));
    return Matrix(sigmoid * a_.transpose());
  }
  bool has_analytic_jacobian() const override { return true; }
  std::string name() const override { return "logsum"; }

 private:
  Vector a_;
  double b_;
};

class PolarExpr final : public MapExpr {
 public:
  int domain_dim() const override { return 2; }
  int codomain_dim() const override { return 2; }
  Vector eval(const Vector& x) const override {
    Vector out(2);
    out << (1.0 + x(0)) * std::cos(x(1)), (1.0 + x(0)) * std::sin(x(1));
    return out;
  }
  std::optional<Matrix> jacobian(const Vector& x) const override {
    Matrix j(2, 2);
    const double r = 1.0 + x(0);
    j << std::cos(x(1)), -r * std::sin(x(1)), std::sin(x(1)), r * std::cos(x(1));
    return j;
  }
  bool has_analytic_jacobian() const override { return true; }
  std::string name() const override { return "polar"; }
};

class ComposeExpr final : public MapExpr {
 public:
  ComposeExpr(std::shared_ptr<const MapExpr> outer, std::shared_ptr<const MapExpr> inner)
      : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (outer_->domain_dim() != inner_->codomain_dim())
      fail(Error::Kind::validation,
           dims_message("compose: outer domain vs inner codomain", outer_->domain_dim(), inner_->codomain_dim()));
  }
  int domain_dim() const override { return inner_->domain_dim(); }
  int codomain_dim() const override { return outer_->codomain_dim(); }
  Vector eval(const Vector& x) const override { return outer_->eval(inner_->eval(x)); }
  std::optional<Matrix> jacobian(const Vector& x) const override {
    if (!has_analytic_jacobian()) return std::nullopt;
    return Matrix(*outer_->jacobian(inner_->eval(x)) * *inner_->jacobian(x));
  }
  bool has_analytic_jacobian() const override {
    return outer_->has_analytic_jacobian() && inner_->has_analytic_jacobian();
  }
  std::string name() const override { return "compose(" + outer_->name() + "," + inner_->name() + ")"; }

 private:
  std::shared_ptr<const MapExpr> outer_;
  std::shared_ptr<const MapExpr> inner_;
};

class StackExpr final : public MapExpr {
 public:
  explicit StackExpr(std::vector<std::shared_ptr<const MapExpr>> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) fail(Error::Kind::validation, "stack needs at least one part");
    for (const auto& p : parts_) {
      if (p->domain_dim() != parts_.front()->domain_dim())
        fail(Error::Kind::validation,
             dims_message("stack: parts must share the domain", p->domain_dim(), parts_.front()->domain_dim()));
      rows_ += p->codomain_dim();
    }
  }
  int domain_dim() const override { return parts_.front()->domain_dim(); }
  int codomain_dim() const override { return rows_; }
  Vector eval(const Vector& x) const override {
    Vector out(rows_);
    Eigen::Index row = 0;
    for (const auto& p : parts_) {
      const Vector v = p->eval(x);
      out.segment(row, v.size()) = v;
      row += v.size();
    }
    return out;
  }
  std::optional<Matrix> jacobian(const Vector& x) const override {
    if (!has_analytic_jacobian()) return std::nullopt;
    Matrix out(rows_, domain_dim());
    Eigen::Index row = 0;
    for (const auto& p : parts_) {
      const Matrix j = *p->jacobian(x);
      out.middleRows(row, j.rows()) = j;
      row += j.rows();
    }
    return out;
  }
  bool has_analytic_jacobian() const override {
    for (const auto& p : parts_)
      if (!p->has_analytic_jacobian()) return false;
    return true;
  }
  std::string name() const override {
    std::string s = "stack(";
    for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + parts_[i]->name();
    return s + ")";
  }

 private:
  std::vector<std::shared_ptr<const MapExpr>> parts_;
  int rows_ = 0;
};

class FunctionExpr final : public MapExpr {
 public:
  FunctionExpr(int n, int m, SmoothMap::EvalFn f, SmoothMap::JacobianFn j, std::string name)
      : n_(n), m_(m), f_(std::move(f)), j_(std::move(j)), name_(std::move(name)) {
    if (n_ < 1 || m_ < 1) fail(Error::Kind::validation, "function map needs positive dimensions");
  }
  int domain_dim() const override { return n_; }
  int codomain_dim() const override { return m_; }
  Vector eval(const Vector& x) const override { return f_(x); }
  std::optional<Matrix> jacobian(const Vector& x) const override {
    if (!j_) return std::nullopt;
    return j_(x);
  }
  bool has_analytic_jacobian() const override { return static_cast<bool>(j_); }
  std::string name() const override { return name_; }

 private:
  int n_;
  int m_;
  SmoothMap::EvalFn f_;
  SmoothMap::JacobianFn j_;
  std::string name_;
};

}  // namespace

Region Region::unbounded(int dim) {
  const double inf = std::numeric_limits<double>::infinity();
  return {Vector::Constant(dim, -inf), Vector::Constant(dim, inf)};
}

Region Region::box(Vector lo, Vector hi) {
  if (lo.size() != hi.size()) fail(Error::Kind::validation, "region bounds must have equal length");
  for (Eigen::Index i = 0; i < lo.size(); ++i)
    if (!(lo(i) < hi(i))) fail(Error::Kind::validation, "region has empty interior (need lo < hi)");
  return {std::move(lo), std::move(hi)};
}

bool Region::contains(const Vector& x) const {
  if (x.size() != lo.size()) return false;
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (!(x(i) > lo(i) && x(i) < hi(i))) return false;
  return true;
}

bool Region::contains_ball(const Vector& center, double radius) const {
  if (center.size() != lo.size()) return false;
  for (Eigen::Index i = 0; i < center.size(); ++i)
    if (!(center(i) - radius > lo(i) && center(i) + radius < hi(i))) return false;
  return true;
}

Region Region::intersect(const Region& other) const {
  if (other.lo.size() != lo.size()) fail(Error::Kind::validation, "region dimensions differ");
  return {lo.cwiseMax(other.lo), hi.cwiseMin(other.hi)};
}

SmoothMap::SmoothMap(std::shared_ptr<const MapExpr> expr)
    : SmoothMap(expr, Region::unbounded(expr ? expr->domain_dim() : 0)) {}

SmoothMap::SmoothMap(std::shared_ptr<const MapExpr> expr, Region region)
    : expr_(std::move(expr)), region_(std::move(region)) {
  if (!expr_) fail(Error::Kind::validation, "smooth map without expression");
  if (region_.dim() != expr_->domain_dim())
    fail(Error::Kind::validation, dims_message("region", region_.dim(), expr_->domain_dim()));
}

SmoothMap SmoothMap::from_functions(int domain_dim, int codomain_dim, EvalFn eval, JacobianFn jacobian,
                                    std::string name) {
  return SmoothMap(std::make_shared<FunctionExpr>(domain_dim, codomain_dim, std::move(eval),
                                                  std::move(jacobian), std::move(name)));
}

SmoothMap SmoothMap::with_region(Region region) const { return SmoothMap(expr_, std::move(region)); }

void SmoothMap::check_domain(const Vector& x) const {
  if (x.size() != domain_dim()) fail(Error::Kind::domain, dims_message("evaluate", x.size(), domain_dim()));
  if (!region_.contains(x)) fail(Error::Kind::domain, "point outside the open region of " + name());
}

Vector SmoothMap::evaluate(const Vector& x) const {
  check_domain(x);
  return expr_->eval(x);
}

Matrix SmoothMap::jacobian(const Vector& x) const {
  check_domain(x);
  if (auto j = expr_->jacobian(x)) return *j;
  return central_difference_jacobian(x);
}

Matrix SmoothMap::central_difference_jacobian(const Vector& x) const {
  check_domain(x);
  const double step_base = std::cbrt(std::numeric_limits<double>::epsilon());
  Matrix j(codomain_dim(), domain_dim());
  Vector xp = x;
  Vector xm = x;
  for (Eigen::Index k = 0; k < x.size(); ++k) {
    const double h = step_base * std::max(1.0, std::abs(x(k)));
    xp(k) = x(k) + h;
    xm(k) = x(k) - h;
    // Use the exactly representable spacing to cancel rounding in x +- h.
    j.col(k) = (expr_->eval(xp) - expr_->eval(xm)) / (xp(k) - xm(k));
    xp(k) = x(k);
    xm(k) = x(k);
  }
  return j;
}

Vector SmoothMap::gradient(const Vector& x) const {
  if (codomain_dim() != 1) fail(Error::Kind::precondition, "gradient requires a scalar map");
  return jacobian(x).row(0).transpose();
}

SmoothMap affine(Matrix a, Vector b) { return SmoothMap(std::make_shared<AffineExpr>(std::move(a), std::move(b))); }

SmoothMap linear(Matrix a) {
  Vector b = Vector::Zero(a.rows());
  return affine(std::move(a), std::move(b));
}

SmoothMap identity(int dim) { return linear(Matrix::Identity(dim, dim)); }

SmoothMap quadratic(Matrix q, Vector a, double c) {
  return SmoothMap(std::make_shared<QuadraticExpr>(std::move(q), std::move(a), c));
}

SmoothMap polynomial(std::vector<std::array<double, 5>> coeffs) {
  return SmoothMap(std::make_shared<PolynomialExpr>(std::move(coeffs)));
}

SmoothMap logsum(Vector a, double b) { return SmoothMap(std::make_shared<LogSumExpr>(std::move(a), b)); }

SmoothMap polar() { return SmoothMap(std::make_shared<PolarExpr>()); }

SmoothMap compose(const SmoothMap& outer, const SmoothMap& inner) {
  return SmoothMap(std::make_shared<ComposeExpr>(outer.expr(), inner.expr()), inner.region());
}

SmoothMap stack(const std::vector<SmoothMap>& parts) {
  if (parts.empty()) fail(Error::Kind::validation, "stack needs at least one part");
  std::vector<std::shared_ptr<const MapExpr>> exprs;
  Region region = parts.front().region();
  for (const auto& p : parts) {
    exprs.push_back(p.expr());
    if (p.domain_dim() == region.dim()) region = region.intersect(p.region());
  }
  return SmoothMap(std::make_shared<StackExpr>(std::move(exprs)), region);
}

SmoothMap scale(const SmoothMap& f, double c) {
  const int m = f.codomain_dim();
  return compose(affine(c * Matrix::Identity(m, m), Vector::Zero(m)), f);
}

SmoothMap translate(const SmoothMap& f, const Vector& b) {
  const int m = f.codomain_dim();
  return compose(affine(Matrix::Identity(m, m), b), f);
}

JacobianCheck check_jacobian(const SmoothMap& map, const Vector& x, double tol) {
  if (map.jacobian_source() != JacobianSource::analytic)
    fail(Error::Kind::precondition, "check_jacobian needs an analytic Jacobian");
  const Matrix analytic = map.jacobian(x);
  const Matrix numeric = map.central_difference_jacobian(x);
  JacobianCheck check;
  check.max_abs_error = (analytic - numeric).cwiseAbs().maxCoeff();
  check.pass = check.max_abs_error <= tol;
  return check;
}

OpennessEstimate surjectivity_check(const SmoothMap& map, const Vector& x, std::optional<double> rank_tol) {
  OpennessEstimate est;
  est.point = x;
  const Matrix j = map.jacobian(x);
  const Vector s = singular_values(j);
  est.largest_singular_value = s.size() ? s(0) : 0.0;
  est.rank_tolerance = rank_tol.value_or(1e-8 * est.largest_singular_value);
  if (j.rows() > j.cols()) {
    // Fewer columns than rows: the image is a proper subspace.
    est.smallest_singular_value = 0.0;
    est.sigma = 0.0;
    est.surjective = false;
    return est;
  }
  est.smallest_singular_value = s(s.size() - 1);
  est.sigma = est.smallest_singular_value;
  est.surjective = est.smallest_singular_value > est.rank_tolerance;
  return est;
}

double estimate_derivative_lipschitz(const SmoothMap& map, const spaces::Ball& ball, int n_samples,
                                     std::uint64_t seed) {
  if (n_samples < 2) fail(Error::Kind::precondition, "need at least two samples");
  Rng rng = make_rng(seed, stream::lipschitz);
  Vector prev = sample_in_ball(rng, ball.center, ball.radius);
  Matrix prev_jac = map.jacobian(prev);
  double best = 0.0;
  for (int i = 1; i < n_samples; ++i) {
    const Vector x = sample_in_ball(rng, ball.center, ball.radius);
    const Matrix jac = map.jacobian(x);
    const double dist = (x - prev).norm();
    if (dist > 0.0) best = std::max(best, operator_norm(jac - prev_jac) / dist);
    prev = x;
    prev_jac = jac;
  }
  return best;
}

}  // namespace locprog::calculus
