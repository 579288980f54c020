#pragma once

// Shared fixtures and independent oracles for the test binaries.

#include "locprog/calculus.hpp"
#include "locprog/economy.hpp"
#include "locprog/problem_io.hpp"
#include "locprog/vopt.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace testsupport {

using locprog::Matrix;
using locprog::Vector;
namespace calc = locprog::calculus;
namespace vopt = locprog::vopt;
namespace econ = locprog::economy;

inline std::string fixture(const std::string& name) { return std::string(LOCPROG_FIXTURE_DIR) + "/" + name; }

inline locprog::io::ProblemFile load(const std::string& name) { return locprog::io::load_problem(fixture(name)); }

inline Vector vec(std::initializer_list<double> v) { return locprog::to_vector(std::vector<double>(v)); }

/// h(x) = (x1, x2), g(x) = x3, C = {0}, K = R^2_+.
inline vopt::VectorProblem r3_benchmark() {
  Matrix a(2, 3);
  a << 1, 0, 0, 0, 1, 0;
  Matrix b(1, 3);
  b << 0, 0, 1;
  return vopt::VectorProblem(calc::linear(a), calc::linear(b), vopt::ConstraintSet::singleton_zero(1),
                             vopt::ConeSpec::nonneg_orthant(2));
}

/// h(x) = (x1 + 0.3 x2^2, x2), g(x) = x3, C = {0}.
inline vopt::VectorProblem nonconvex_benchmark() {
  Matrix q = Matrix::Zero(3, 3);
  q(1, 1) = 0.3;
  Matrix row(1, 3);
  row << 0, 1, 0;
  Matrix b(1, 3);
  b << 0, 0, 1;
  auto h = calc::stack({calc::quadratic(q, vec({1, 0, 0}), 0.0), calc::linear(row)});
  return vopt::VectorProblem(h, calc::linear(b), vopt::ConstraintSet::singleton_zero(1),
                             vopt::ConeSpec::nonneg_orthant(2));
}

/// Convexity radius of the polar map around x0 from the discretized image
/// boundary: each image point is inverted in closed form, so a midpoint lies
/// outside f(B(x0, r)) iff all its preimages are farther than r from x0.
class PolarRasterOracle {
 public:
  PolarRasterOracle(Vector x0, int boundary_points) : x0_(std::move(x0)), n_(boundary_points) {}

  double preimage_distance(double u, double v) const {
    const double rho = std::hypot(u, v);
    const double theta = std::atan2(v, u);
    double best = INFINITY;
    for (int k = -2; k <= 2; ++k) {
      const double t = theta + 2.0 * M_PI * k;
      best = std::min(best, std::hypot(rho - 1.0 - x0_(0), t - x0_(1)));
      best = std::min(best, std::hypot(-rho - 1.0 - x0_(0), t + M_PI - x0_(1)));
    }
    return best;
  }

  bool convex_at(double r, double slack = 1e-7) const {
    std::vector<double> px(n_), py(n_);
    for (int i = 0; i < n_; ++i) {
      const double t = 2.0 * M_PI * i / n_;
      const double a = 1.0 + x0_(0) + r * std::cos(t);
      const double b = x0_(1) + r * std::sin(t);
      px[i] = a * std::cos(b);
      py[i] = a * std::sin(b);
    }
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (preimage_distance(0.5 * (px[i] + px[j]), 0.5 * (py[i] + py[j])) > r + slack) return false;
    return true;
  }

  double transition_radius(double lo, double hi, int steps = 40) const {
    for (int s = 0; s < steps; ++s) {
      const double mid = 0.5 * (lo + hi);
      (convex_at(mid) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  }

 private:
  Vector x0_;
  int n_;
};

/// Every catalog entry, on a domain where it is smooth.
struct NamedMap {
  std::string name;
  calc::SmoothMap map;
};

inline std::vector<NamedMap> catalog_maps() {
  Matrix a(2, 3);
  a << 1, -2, 0.5, 0.3, 0, -1;
  Matrix q(3, 3);
  q << 2, 0.5, 0, 0.5, -1, 0.25, 0, 0.25, 0.5;
  auto quad = calc::quadratic(q, vec({1, -1, 0.5}), 0.3);
  auto poly = calc::polynomial({{1, 2, -1, 0.5, 0.1}, {0, -1, 0, 0.3, 0}, {2, 0, 0.5, 0, -0.2}});
  auto logs = calc::logsum(vec({0.5, -1, 2}), 0.1);
  Matrix to2(2, 3);
  to2 << 1, 0, 0, 0, 0, 1;
  return {
      {"affine", calc::affine(a, vec({1, 2}))},
      {"linear", calc::linear(a)},
      {"identity", calc::identity(3)},
      {"quadratic", quad},
      {"polynomial", poly},
      {"logsum", logs},
      {"polar", calc::compose(calc::polar(), calc::linear(to2))},
      {"compose", calc::compose(calc::polynomial({{0, 1, 0, 1, 0}, {0, 0, 1, 0, 0}}), calc::affine(a, vec({0.1, -0.2})))},
      {"stack", calc::stack({quad, logs, poly})},
      {"scale", calc::scale(poly, -2.5)},
      {"translate", calc::translate(calc::affine(a, vec({0, 0})), vec({3, -4}))},
  };
}

}  // namespace testsupport
