#include "locprog/spaces.hpp"

#include "locprog/error.hpp"

#include <cmath>
#include <sstream>

namespace locprog::spaces {

SpaceSpec::SpaceSpec(int dimension, NormKind kind, double p, std::string label)
    : dimension_(dimension), kind_(kind), p_(p), label_(std::move(label)) {
  if (dimension_ < 1) fail(Error::Kind::validation, "dimension must be >= 1");
  if (kind_ == NormKind::p_norm && !(p_ > 1.0 && p_ < 2.0))
    fail(Error::Kind::validation, "p must lie in (1,2)");
}

SpaceSpec SpaceSpec::euclidean(int dimension, std::string label) {
  return SpaceSpec(dimension, NormKind::euclidean, 2.0, std::move(label));
}

SpaceSpec SpaceSpec::p_norm(int dimension, double p, std::string label) {
  return SpaceSpec(dimension, NormKind::p_norm, p, std::move(label));
}

double SpaceSpec::norm(const Vector& x) const {
  if (kind_ == NormKind::euclidean) return x.norm();
  double sum = 0.0;
  const double scale = x.cwiseAbs().maxCoeff();
  if (scale == 0.0) return 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) sum += std::pow(std::abs(x(i)) / scale, p_);
  return scale * std::pow(sum, 1.0 / p_);
}

Ball::Ball(SpaceSpec space_, Vector center_, double radius_)
    : space(std::move(space_)), center(std::move(center_)), radius(radius_) {
  if (center.size() != space.dimension())
    fail(Error::Kind::validation, "ball center dimension does not match its space");
  if (!(radius >= 0.0)) fail(Error::Kind::validation, "ball radius must be nonnegative");
}

Ball::Ball(Vector center_, double radius_)
    : space(SpaceSpec::euclidean(static_cast<int>(std::max<Eigen::Index>(center_.size(), 1)))),
      center(std::move(center_)),
      radius(radius_) {
  if (center.size() != space.dimension())
    fail(Error::Kind::validation, "ball center dimension does not match its space");
  if (!(radius >= 0.0)) fail(Error::Kind::validation, "ball radius must be nonnegative");
}

bool Ball::contains(const Vector& x, double slack) const {
  return space.norm(x - center) <= radius + slack;
}

ProductSpaceSpec::ProductSpaceSpec(SpaceSpec base, int copies) : base_(std::move(base)), copies_(copies) {
  if (copies_ < 1) fail(Error::Kind::validation, "product space needs at least one copy");
}

double ProductSpaceSpec::norm(const Vector& stacked) const {
  const int m = base_.dimension();
  if (stacked.size() != static_cast<Eigen::Index>(m) * copies_)
    fail(Error::Kind::domain, "stacked vector has wrong length for the product space");
  double sum = 0.0;
  for (int i = 0; i < copies_; ++i) {
    const double n = base_.norm(stacked.segment(static_cast<Eigen::Index>(i) * m, m));
    sum += n * n;
  }
  return std::sqrt(sum);
}

double nordlander_bound(double eps) { return 1.0 - std::sqrt(1.0 - eps * eps / 4.0); }

double modulus_of_convexity(const SpaceSpec& space, double eps) {
  if (!(eps >= 0.0 && eps <= 2.0)) {
    std::ostringstream os;
    os << "modulus of convexity is defined on [0,2], got eps=" << eps;
    fail(Error::Kind::domain, os.str());
  }
  if (space.norm_kind() == NormKind::euclidean) return nordlander_bound(eps);
  return quadratic_growth_constant(space) * eps * eps;
}

double quadratic_growth_constant(const SpaceSpec& space) {
  if (space.norm_kind() == NormKind::euclidean) return 0.125;
  return (space.p() - 1.0) / 8.0;
}

Vector project_to_ball(const Ball& ball, const Vector& point) {
  const Vector offset = point - ball.center;
  const double dist = ball.space.norm(offset);
  // Points produced by a previous projection sit on the sphere up to roundoff
  // in (center + offset) - center; treat them as inside so projection is idempotent.
  const double slack = 1e-14 * (ball.radius + ball.center.cwiseAbs().maxCoeff());
  if (dist <= ball.radius + slack) return point;
  return ball.center + (ball.radius / dist) * offset;
}

}  // namespace locprog::spaces
