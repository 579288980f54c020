#include "locprog/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace locprog {

double operator_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return singular_values(m)(0);
}

Vector singular_values(const Matrix& m) {
  if (m.size() == 0) return Vector();
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues();
}

NnlsResult nnls(const Matrix& a, const Vector& b, int max_iterations) {
  const Eigen::Index n = a.cols();
  if (max_iterations <= 0) max_iterations = static_cast<int>(3 * n + 30);
  Vector x = Vector::Zero(n);
  std::vector<bool> passive(static_cast<std::size_t>(n), false);
  const double eps = std::numeric_limits<double>::epsilon();
  const double tol = 10.0 * eps * std::max<double>(1.0, a.cwiseAbs().colwise().sum().maxCoeff()) *
                     static_cast<double>(std::max<Eigen::Index>(n, 1)) * std::max(1.0, b.norm());

  auto solve_passive = [&](std::vector<Eigen::Index>& idx) {
    idx.clear();
    for (Eigen::Index j = 0; j < n; ++j)
      if (passive[static_cast<std::size_t>(j)]) idx.push_back(j);
    Matrix ap(a.rows(), static_cast<Eigen::Index>(idx.size()));
    for (std::size_t k = 0; k < idx.size(); ++k) ap.col(static_cast<Eigen::Index>(k)) = a.col(idx[k]);
    Vector zp = ap.completeOrthogonalDecomposition().solve(b);
    Vector z = Vector::Zero(n);
    for (std::size_t k = 0; k < idx.size(); ++k) z(idx[k]) = zp(static_cast<Eigen::Index>(k));
    return z;
  };

  int iterations = 0;
  std::vector<Eigen::Index> idx;
  std::vector<bool> blocked(static_cast<std::size_t>(n), false);
  while (iterations < max_iterations) {
    Vector w = a.transpose() * (b - a * x);
    Eigen::Index t = -1;
    double best = tol;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (passive[static_cast<std::size_t>(j)] || blocked[static_cast<std::size_t>(j)]) continue;
      if (w(j) > best) {
        best = w(j);
        t = j;
      }
    }
    if (t < 0) break;
    passive[static_cast<std::size_t>(t)] = true;
    ++iterations;

    bool first_inner = true;
    while (true) {
      Vector z = solve_passive(idx);
      bool all_positive = true;
      for (Eigen::Index j : idx)
        if (z(j) <= 0.0) all_positive = false;
      if (all_positive) {
        x = z;
        std::fill(blocked.begin(), blocked.end(), false);
        break;
      }
      if (first_inner && z(t) <= 0.0) {
        // Roundoff made the entering column useless; exclude it until x moves.
        passive[static_cast<std::size_t>(t)] = false;
        blocked[static_cast<std::size_t>(t)] = true;
        break;
      }
      first_inner = false;
      double alpha = std::numeric_limits<double>::infinity();
      for (Eigen::Index j : idx)
        if (z(j) <= 0.0) alpha = std::min(alpha, x(j) / (x(j) - z(j)));
      x += alpha * (z - x);
      for (Eigen::Index j : idx) {
        if (x(j) <= 10.0 * eps * std::max(1.0, x.cwiseAbs().maxCoeff())) {
          x(j) = 0.0;
          passive[static_cast<std::size_t>(j)] = false;
        }
      }
      if (++iterations >= max_iterations) break;
    }
  }
  NnlsResult result;
  result.solution = x.cwiseMax(0.0);
  result.residual_norm = (a * result.solution - b).norm();
  result.iterations = iterations;
  return result;
}

Vector solve_ball_quadratic(const Matrix& h, const Vector& q, double radius) {
  const Eigen::Index n = q.size();
  if (radius <= 0.0) return Vector::Zero(n);
  Eigen::SelfAdjointEigenSolver<Matrix> eig(0.5 * (h + h.transpose()));
  const Vector lambda = eig.eigenvalues();
  const Matrix& basis = eig.eigenvectors();
  const Vector qt = basis.transpose() * q;
  const double lambda_min = lambda(0);
  const double scale = std::max(1.0, lambda.cwiseAbs().maxCoeff());

  auto step = [&](double shift) {
    Vector coeff(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const double d = lambda(i) + shift;
      coeff(i) = d > 0.0 ? -qt(i) / d : 0.0;
    }
    return coeff;
  };

  if (lambda_min > 1e-14 * scale) {
    Vector coeff = step(0.0);
    if (coeff.norm() <= radius) return basis * coeff;
  }

  const double floor_shift = std::max(0.0, -lambda_min);
  double lo = floor_shift + 1e-15 * scale;
  Vector at_lo = step(lo);
  if (at_lo.norm() < radius) {
    // Hard case: fill the remaining length along the lowest eigenvector.
    const double tau = std::sqrt(std::max(0.0, radius * radius - at_lo.squaredNorm()));
    at_lo(0) += tau;
    return basis * at_lo;
  }
  double hi = floor_shift + q.norm() / radius + scale;
  double shift = lo;
  for (int it = 0; it < 200; ++it) {
    const Vector coeff = step(shift);
    const double phi = coeff.norm();
    if (std::abs(phi - radius) <= 1e-15 * radius) break;
    if (phi > radius)
      lo = shift;
    else
      hi = shift;
    double dphi = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double d = lambda(i) + shift;
      if (d > 0.0) dphi -= qt(i) * qt(i) / (d * d * d);
    }
    dphi /= phi;
    const double psi = 1.0 / phi - 1.0 / radius;
    const double dpsi = -dphi / (phi * phi);
    double next = dpsi != 0.0 ? shift - psi / dpsi : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (hi - lo <= 1e-16 * std::max(1.0, hi)) break;
    shift = next;
  }
  Vector coeff = step(shift);
  const double norm = coeff.norm();
  if (norm > 0.0) coeff *= radius / norm;
  return basis * coeff;
}

Matrix column_space_basis(const Matrix& m, double rel_tol) {
  if (m.cols() == 0 || m.rows() == 0) return Matrix(m.rows(), 0);
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU);
  const Vector& s = svd.singularValues();
  const double cut = rel_tol * std::max(s(0), 1e-300);
  Eigen::Index rank = 0;
  while (rank < s.size() && s(rank) > cut) ++rank;
  return svd.matrixU().leftCols(rank);
}

Matrix orthogonal_complement(const Matrix& m, double rel_tol) {
  if (m.cols() == 0) return Matrix::Identity(m.rows(), m.rows());
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU);
  const Vector& s = svd.singularValues();
  const double cut = rel_tol * std::max(s(0), 1e-300);
  Eigen::Index rank = 0;
  while (rank < s.size() && s(rank) > cut) ++rank;
  return svd.matrixU().rightCols(m.rows() - rank);
}

}  // namespace locprog
