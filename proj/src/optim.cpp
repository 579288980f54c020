#include "locprog/optim.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

namespace locprog::optim {

using spaces::project_to_ball;

double projected_gradient_norm(const spaces::Ball& ball, const Vector& x, const Vector& gradient) {
  return (project_to_ball(ball, x + gradient) - x).norm();
}

LeastSquaresResult ball_least_squares(const calculus::SmoothMap& f, const Vector& target,
                                      const spaces::Ball& ball, const Vector& start,
                                      const LeastSquaresOptions& options) {
  LeastSquaresResult result;
  Vector x = project_to_ball(ball, start);
  Vector r = f.evaluate(x) - target;
  double cost = 0.5 * r.squaredNorm();
  Matrix j = f.jacobian(x);
  double mu = 1e-3 * std::max(1e-12, (j.transpose() * j).diagonal().maxCoeff());
  double nu = 2.0;
  const Eigen::Index n = x.size();

  for (int it = 0; it < options.max_iterations; ++it) {
    result.iterations = it;
    if (std::sqrt(2.0 * cost) <= options.target_residual) {
      result.converged = true;
      break;
    }
    const Vector grad = j.transpose() * r;
    // Stationary for the ball-constrained problem: projected steepest descent does not move.
    if (projected_gradient_norm(ball, x, -grad) <= 1e-14 * std::max(1.0, grad.norm() + x.norm())) {
      result.converged = true;
      break;
    }
    const Matrix h = j.transpose() * j + mu * Matrix::Identity(n, n);
    // Step d with x + d = center + e, ||e|| <= radius.
    const Vector u = x - ball.center;
    const Vector e = solve_ball_quadratic(h, grad - h * u, ball.radius);
    Vector x_new = ball.center + e;
    x_new = project_to_ball(ball, x_new);
    const Vector d = x_new - x;
    if (d.norm() <= 1e-15 * std::max(1.0, x.norm())) {
      if (mu > 1e12) {
        result.converged = true;
        break;
      }
      mu *= nu;
      nu *= 2.0;
      continue;
    }
    const Vector r_new = f.evaluate(x_new) - target;
    const double cost_new = 0.5 * r_new.squaredNorm();
    const double predicted = -(grad.dot(d) + 0.5 * d.dot((j.transpose() * j) * d));
    const double actual = cost - cost_new;
    if (actual > 0.0) {
      const double rho = predicted > 0.0 ? actual / predicted : 1.0;
      const bool tiny_progress = actual <= 1e-16 * cost;
      x = x_new;
      r = r_new;
      cost = cost_new;
      j = f.jacobian(x);
      mu *= std::max(1.0 / 3.0, 1.0 - std::pow(2.0 * rho - 1.0, 3));
      mu = std::max(mu, 1e-300);
      nu = 2.0;
      if (tiny_progress) {
        result.converged = true;
        break;
      }
    } else {
      mu *= nu;
      nu *= 2.0;
      if (mu > 1e20) {
        // No descent at any damping: first-order stationary up to roundoff.
        result.converged = true;
        break;
      }
    }
  }
  if (!result.converged && std::sqrt(2.0 * cost) <= options.target_residual) result.converged = true;
  result.x = x;
  result.residual = std::sqrt(2.0 * cost);
  return result;
}

SpgResult spg_maximize(const Objective& objective, const spaces::Ball& ball, const Vector& start,
                       const SpgOptions& options) {
  constexpr double alpha_min = 1e-12;
  constexpr double alpha_max = 1e12;
  constexpr double gamma = 1e-4;
  SpgResult result;
  Vector x = project_to_ball(ball, start);
  Vector grad(x.size());
  double value = objective(x, grad);
  std::deque<double> history{value};

  double stationarity = projected_gradient_norm(ball, x, grad);
  double alpha = 1.0 / std::max(1e-12, stationarity);
  alpha = std::clamp(alpha, alpha_min, alpha_max);

  int it = 0;
  for (; it < options.max_iterations; ++it) {
    if (stationarity <= options.tolerance) break;
    const Vector d = project_to_ball(ball, x + alpha * grad) - x;
    const double slope = grad.dot(d);
    const double reference = *std::min_element(history.begin(), history.end());
    double lambda = 1.0;
    Vector x_new;
    Vector grad_new(x.size());
    double value_new = 0.0;
    bool accepted = false;
    for (int ls = 0; ls < 60; ++ls) {
      x_new = x + lambda * d;
      value_new = objective(x_new, grad_new);
      if (value_new >= reference + gamma * lambda * slope) {
        accepted = true;
        break;
      }
      lambda *= 0.5;
    }
    if (!accepted) break;
    const Vector s = x_new - x;
    const Vector y = grad_new - grad;
    x = std::move(x_new);
    grad = grad_new;
    value = value_new;
    history.push_back(value);
    if (static_cast<int>(history.size()) > options.memory) history.pop_front();
    // Ascent: curvature of the negated objective.
    const double sy = -s.dot(y);
    alpha = sy > 0.0 ? std::clamp(s.squaredNorm() / sy, alpha_min, alpha_max) : alpha_max;
    stationarity = projected_gradient_norm(ball, x, grad);
    if (s.norm() <= 1e-16 * std::max(1.0, x.norm())) break;
  }
  result.x = x;
  result.value = value;
  result.stationarity = stationarity;
  result.iterations = it;
  result.converged = stationarity <= options.tolerance;
  return result;
}

}  // namespace locprog::optim
