#pragma once

#include "locprog/calculus.hpp"
#include "locprog/spaces.hpp"

#include <functional>

namespace locprog::optim {

struct LeastSquaresOptions {
  double target_residual = 1e-10;  ///< stop once ||f(x) - target|| falls below
  int max_iterations = 200;
};

struct LeastSquaresResult {
  Vector x;
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;  ///< target reached or first-order stationary
};

/// min ||f(x) - target|| over a euclidean ball. Levenberg-Marquardt where each
/// step minimizes the damped Gauss-Newton model exactly over the ball.
LeastSquaresResult ball_least_squares(const calculus::SmoothMap& f, const Vector& target,
                                      const spaces::Ball& ball, const Vector& start,
                                      const LeastSquaresOptions& options = {});

/// Value and gradient of a smooth objective.
using Objective = std::function<double(const Vector& x, Vector& gradient)>;

struct SpgOptions {
  double tolerance = 1e-12;  ///< on ||P(x + grad) - x||
  int max_iterations = 5000;
  int memory = 10;  ///< nonmonotone line-search window
};

struct SpgResult {
  Vector x;
  double value = 0.0;
  double stationarity = 0.0;  ///< ||P(x + grad) - x||
  int iterations = 0;
  bool converged = false;
};

/// Maximizes an objective over a euclidean ball with the nonmonotone spectral
/// projected gradient method.
SpgResult spg_maximize(const Objective& objective, const spaces::Ball& ball, const Vector& start,
                       const SpgOptions& options = {});

/// ||P_ball(x + g) - x||: first-order stationarity of a ball-constrained maximization.
double projected_gradient_norm(const spaces::Ball& ball, const Vector& x, const Vector& gradient);

}  // namespace locprog::optim
