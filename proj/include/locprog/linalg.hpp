#pragma once

#include <Eigen/Dense>

#include <vector>

namespace locprog {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

inline Vector to_vector(const std::vector<double>& v) {
  return Eigen::Map<const Vector>(v.data(), static_cast<Eigen::Index>(v.size()));
}

inline std::vector<double> to_std(const Vector& v) { return {v.data(), v.data() + v.size()}; }

/// Largest singular value.
double operator_norm(const Matrix& m);

/// Singular values in descending order.
Vector singular_values(const Matrix& m);

struct NnlsResult {
  Vector solution;
  double residual_norm = 0.0;
  int iterations = 0;
};

/// Lawson-Hanson active-set solver for min ||A z - b|| subject to z >= 0.
NnlsResult nnls(const Matrix& a, const Vector& b, int max_iterations = 0);

/// Minimizes 0.5 e'He + q'e over ||e|| <= radius for symmetric positive
/// semidefinite H (More-Sorensen secular equation on the eigenbasis).
Vector solve_ball_quadratic(const Matrix& h, const Vector& q, double radius);

/// Orthonormal basis of the column space of m (rank decided relative to the
/// largest singular value).
Matrix column_space_basis(const Matrix& m, double rel_tol = 1e-10);

/// Orthonormal basis of the orthogonal complement of the column space.
Matrix orthogonal_complement(const Matrix& m, double rel_tol = 1e-10);

}  // namespace locprog
