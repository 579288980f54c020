#include "locprog/economy.hpp"

#include "locprog/error.hpp"
#include "locprog/parallel.hpp"
#include "locprog/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace locprog::economy {

using calculus::Region;
using calculus::SmoothMap;
using vopt::ConeSpec;
using vopt::ConstraintSet;

namespace {

constexpr double kInteriorMargin = 1e-8;

/// x -> x_i, the m x nm block selector.
Matrix selector(int consumers, int goods, int i) {
  Matrix s = Matrix::Zero(goods, consumers * goods);
  s.block(0, i * goods, goods, goods) = Matrix::Identity(goods, goods);
  return s;
}

}  // namespace

ConsumptionSet ConsumptionSet::box(Vector lo, Vector hi) {
  if (lo.size() != hi.size() || lo.size() < 1) fail(Error::Kind::validation, "consumption box bounds must have equal positive length");
  for (Eigen::Index k = 0; k < lo.size(); ++k)
    if (!(lo(k) < hi(k))) fail(Error::Kind::validation, "Ω_i has empty interior");
  ConsumptionSet s;
  s.kind_ = Kind::box;
  s.lo_ = std::move(lo);
  s.hi_ = std::move(hi);
  return s;
}

ConsumptionSet ConsumptionSet::ball(Vector center, double radius) {
  if (center.size() < 1) fail(Error::Kind::validation, "consumption ball needs a center");
  if (!(radius > 0.0) || !std::isfinite(radius)) fail(Error::Kind::validation, "Ω_i has empty interior");
  ConsumptionSet s;
  s.kind_ = Kind::ball;
  s.lo_ = center.array() - radius;
  s.hi_ = center.array() + radius;
  s.center_ = std::move(center);
  s.radius_ = radius;
  return s;
}

double ConsumptionSet::interior_margin(const Vector& x) const {
  if (kind_ == Kind::ball) return radius_ - (x - center_).norm();
  return std::min((x - lo_).minCoeff(), (hi_ - x).minCoeff());
}

bool ConsumptionSet::contains_ball(const Vector& x, double r) const { return interior_margin(x) > r; }

Region ConsumptionSet::bounding_region() const { return Region::box(lo_, hi_); }

Economy::Economy(std::vector<Consumer> consumers, Vector endowment, ConstraintSet theta)
    : consumers_(std::move(consumers)), endowment_(std::move(endowment)), theta_(std::move(theta)) {
  const int n = n_consumers();
  const int m = n_goods();
  if (n < 1) fail(Error::Kind::validation, "economy needs at least one consumer");
  if (m < 1) fail(Error::Kind::validation, "economy needs at least one good");
  for (int i = 0; i < n; ++i) {
    const auto& c = consumers_[static_cast<std::size_t>(i)];
    const std::string who = "consumer " + std::to_string(i + 1);
    if (c.set.dim() != m) fail(Error::Kind::validation, who + ": consumption set has the wrong dimension");
    if (c.utility.domain_dim() != m || c.utility.codomain_dim() != 1)
      fail(Error::Kind::validation, who + ": utility must map R^m to R");
  }
  if (theta_.ambient_dim() != m) fail(Error::Kind::validation, "Theta must live in the commodity space");
  if (!theta_.is_cone()) fail(Error::Kind::validation, "Theta must be a convex cone");
  if (n * m < n + m)
    fail(Error::Kind::validation, "regularity dimension count fails: n*m = " + std::to_string(n * m) +
                                      " < n+m = " + std::to_string(n + m) +
                                      ", so D(u,c) can never be onto");
}

Vector Economy::bundle(const Vector& allocation, int i) const {
  return allocation.segment(static_cast<Eigen::Index>(i) * n_goods(), n_goods());
}

Vector Economy::stack(const std::vector<Vector>& bundles) const {
  if (static_cast<int>(bundles.size()) != n_consumers()) fail(Error::Kind::validation, "one bundle per consumer expected");
  Vector x(allocation_dim());
  for (int i = 0; i < n_consumers(); ++i) {
    if (bundles[static_cast<std::size_t>(i)].size() != n_goods())
      fail(Error::Kind::validation, "bundle has the wrong number of goods");
    x.segment(static_cast<Eigen::Index>(i) * n_goods(), n_goods()) = bundles[static_cast<std::size_t>(i)];
  }
  return x;
}

ConstraintSet theta_zero(int goods) { return ConstraintSet::singleton_zero(goods); }

ConstraintSet theta_neg_orthant(int goods) {
  return ConstraintSet::cone(ConeSpec::polyhedral(-Matrix::Identity(goods, goods)));
}

SmoothMap feasibility_map(const Economy& economy) {
  const int n = economy.n_consumers();
  const int m = economy.n_goods();
  Matrix a(m, n * m);
  for (int i = 0; i < n; ++i) a.block(0, i * m, m, m) = Matrix::Identity(m, m);
  return calculus::affine(a, -economy.endowment());
}

SmoothMap stacked_utilities(const Economy& economy) {
  const int n = economy.n_consumers();
  const int m = economy.n_goods();
  std::vector<SmoothMap> parts;
  parts.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    parts.push_back(calculus::compose(economy.consumers()[static_cast<std::size_t>(i)].utility,
                                      calculus::linear(selector(n, m, i))));
  return calculus::stack(parts);
}

Matrix stacked_derivative(const Economy& economy, const Vector& allocation) {
  const Matrix ju = stacked_utilities(economy).jacobian(allocation);
  const Matrix jc = feasibility_map(economy).jacobian(allocation);
  Matrix d(ju.rows() + jc.rows(), allocation.size());
  d << ju, jc;
  return d;
}

vopt::VectorProblem as_vector_problem(const Economy& economy) {
  const int m = economy.n_goods();
  Vector lo(economy.allocation_dim());
  Vector hi(economy.allocation_dim());
  for (int i = 0; i < economy.n_consumers(); ++i) {
    const auto& s = economy.consumers()[static_cast<std::size_t>(i)].set;
    lo.segment(static_cast<Eigen::Index>(i) * m, m) = s.lo();
    hi.segment(static_cast<Eigen::Index>(i) * m, m) = s.hi();
  }
  return vopt::VectorProblem(stacked_utilities(economy), feasibility_map(economy), economy.theta(),
                             ConeSpec::nonneg_orthant(economy.n_consumers()), Region::box(lo, hi));
}

bool is_feasible(const Economy& economy, const Vector& allocation, double tol) {
  if (allocation.size() != economy.allocation_dim()) return false;
  for (int i = 0; i < economy.n_consumers(); ++i)
    if (economy.consumers()[static_cast<std::size_t>(i)].set.interior_margin(economy.bundle(allocation, i)) < 0.0)
      return false;
  return economy.theta().distance(feasibility_map(economy).evaluate(allocation)) <= tol;
}

RegularityVerdict check_regular(const Economy& economy, const Vector& allocation,
                                std::optional<double> rank_tol) {
  if (allocation.size() != economy.allocation_dim())
    fail(Error::Kind::validation, "allocation has the wrong dimension");
  RegularityVerdict v;
  v.interior_margin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < economy.n_consumers(); ++i) {
    const double margin =
        economy.consumers()[static_cast<std::size_t>(i)].set.interior_margin(economy.bundle(allocation, i));
    v.interior_margin = std::min(v.interior_margin, margin);
    if (margin <= kInteriorMargin && v.reason.empty())
      v.reason = "interiority: bundle of consumer " + std::to_string(i + 1) + " is not interior to its consumption set";
  }
  const Matrix d = stacked_derivative(economy, allocation);
  if (d.rows() == d.cols()) v.determinant = d.determinant();
  const Vector sv = singular_values(d);
  v.sigma_min = d.rows() <= d.cols() ? sv(sv.size() - 1) : 0.0;
  const double tol = rank_tol.value_or(1e-8 * sv(0));
  const bool onto = d.rows() <= d.cols() && v.sigma_min > tol;
  if (v.reason.empty() && !onto)
    v.reason = "rank: D(u,c)(x) is not onto (smallest singular value " + std::to_string(v.sigma_min) + ")";
  v.regular = v.reason.empty();
  return v;
}

ParetoResult localized_pareto(const Economy& economy, const Vector& x0, double eps,
                              const Vector& weights, const vopt::SolveConfig& config) {
  const auto regularity = check_regular(economy, x0);
  if (!regularity.regular) fail(Error::Kind::precondition, "x0 is not regular: " + regularity.reason);
  for (int i = 0; i < economy.n_consumers(); ++i)
    if (!economy.consumers()[static_cast<std::size_t>(i)].set.contains_ball(economy.bundle(x0, i), eps))
      fail(Error::Kind::precondition, "B(x0, eps) leaves the consumption set of consumer " + std::to_string(i + 1));
  const vopt::Localization loc(as_vector_problem(economy), x0, eps);
  auto cert = vopt::solve_localization(loc, weights, config);
  return {cert.x_eps, std::move(cert)};
}

EquilibriumResiduals equilibrium_residuals(const Economy& economy, const EquilibriumCertificate& cert) {
  EquilibriumResiduals r;
  const Vector cx = feasibility_map(economy).evaluate(cert.allocation);
  r.positivity = economy.theta().normal_cone_violation(cx, cert.price);
  r.market_clearing = std::abs(cert.price.dot(cx));
  double distributed = 0.0;
  for (const auto& w : cert.distribution) distributed += cert.price.dot(w);
  r.distribution_consistency = std::abs(distributed - cert.price.dot(economy.endowment()));
  for (int i = 0; i < economy.n_consumers() && i < static_cast<int>(cert.distribution.size()); ++i) {
    const double gap = std::abs(cert.price.dot(economy.bundle(cert.allocation, i)) -
                                cert.price.dot(cert.distribution[static_cast<std::size_t>(i)]));
    r.individual_optimality = std::max(r.individual_optimality, gap);
  }
  return r;
}

EquilibriumCertificate build_equilibrium(const Economy& economy, const Vector& x0,
                                         const ParetoResult& result) {
  const auto& cert = result.certificate;
  const Vector& mu = cert.w_star;
  if (mu.size() != economy.n_consumers()) fail(Error::Kind::precondition, "multiplier has the wrong dimension");
  Eigen::Index j = 0;
  for (Eigen::Index i = 1; i < mu.size(); ++i)
    if (mu(i) > mu(j)) j = i;
  if (!(mu(j) > 1e-12)) fail(Error::Kind::precondition, "no strictly positive weight to normalize the price");
  if (cert.y_star.norm() <= 1e-10) fail(Error::Kind::zero_price, "y* vanishes, so the price is zero");

  EquilibriumCertificate eq;
  eq.allocation = result.allocation;
  eq.reference = x0;
  eq.price = -cert.y_star / mu(j);
  eq.weights = mu;
  eq.normalizing_index = static_cast<int>(j);
  for (int i = 0; i < economy.n_consumers(); ++i) {
    const Vector xi = economy.bundle(result.allocation, i);
    eq.distribution.push_back(xi);
    eq.radii.push_back((xi - economy.bundle(x0, i)).norm());
  }
  if (*std::min_element(eq.radii.begin(), eq.radii.end()) <= 1e-10)
    fail(Error::Kind::degenerate_radius, "some consumer did not move: min eta_i <= 1e-10");
  eq.residuals = equilibrium_residuals(economy, eq);
  return eq;
}

EquilibriumReport verify_equilibrium(const Economy& economy, const EquilibriumCertificate& cert,
                                     int n_samples, std::uint64_t seed, double tol, int threads) {
  const int n = economy.n_consumers();
  if (cert.allocation.size() != economy.allocation_dim() || cert.reference.size() != economy.allocation_dim() ||
      cert.price.size() != economy.n_goods() || static_cast<int>(cert.distribution.size()) != n ||
      static_cast<int>(cert.radii.size()) != n)
    fail(Error::Kind::validation, "equilibrium certificate does not match the economy's dimensions");
  for (const auto& w : cert.distribution)
    if (w.size() != economy.n_goods()) fail(Error::Kind::validation, "distribution bundle has the wrong dimension");

  EquilibriumReport report;
  auto& checks = report.checks.checks;
  const auto res = equilibrium_residuals(economy, cert);
  checks.push_back({"positivity", res.positivity, tol, res.positivity <= tol, std::nullopt});
  checks.push_back({"market_clearing", res.market_clearing, tol, res.market_clearing <= tol, std::nullopt});
  checks.push_back({"distribution_consistency", res.distribution_consistency, tol,
                    res.distribution_consistency <= tol, std::nullopt});

  report.consumers.resize(static_cast<std::size_t>(n));
  std::vector<double> exactness(static_cast<std::size_t>(n));
  parallel_for(static_cast<std::size_t>(n), threads, [&](std::size_t i) {
    const int ci = static_cast<int>(i);
    const auto& u = economy.consumers()[i].utility;
    const Vector xi = economy.bundle(cert.allocation, ci);
    const Vector center = economy.bundle(cert.reference, ci);
    const double eta = cert.radii[i];
    const double budget = cert.price.dot(cert.distribution[i]);
    exactness[i] = std::abs(cert.price.dot(xi) - budget);
    const double base = u.evaluate(xi)(0);
    const spaces::Ball ball(center, eta);
    ConsumerAudit audit;
    const int attempts = 4 * std::max(n_samples, 0);
    for (int k = 0; k < attempts && audit.budget_samples < n_samples; ++k) {
      Rng rng = make_rng(seed, stream::budget, static_cast<std::uint64_t>(i) * 0x100000000ULL + static_cast<std::uint64_t>(k));
      // Half uniform on the ball, half perturbations of the bundle.
      const Vector z = k % 2 == 0 ? sample_in_ball(rng, center, eta)
                                  : spaces::project_to_ball(ball, sample_in_ball(rng, xi, 0.1 * eta));
      if (cert.price.dot(z) > budget) continue;
      ++audit.budget_samples;
      const double gain = u.evaluate(z)(0) - base;
      if (gain > tol) ++audit.violations;
      if (gain > audit.max_gain) {
        audit.max_gain = gain;
        if (gain > tol) audit.witness = z;
      }
    }
    report.consumers[i] = std::move(audit);
  });

  for (int i = 0; i < n; ++i) {
    const auto& a = report.consumers[static_cast<std::size_t>(i)];
    const std::string suffix = "[" + std::to_string(i + 1) + "]";
    const double e = exactness[static_cast<std::size_t>(i)];
    checks.push_back({"budget_exactness" + suffix, e, tol, e <= tol, std::nullopt});
    checks.push_back({"individual_optimality" + suffix, a.max_gain, tol, a.violations == 0, a.witness});
  }
  report.checks.pass =
      std::all_of(checks.begin(), checks.end(), [](const vopt::CheckResult& c) { return c.pass; });
  return report;
}

std::vector<SearchVerdict> check_nonsatiation(const Economy& economy, const Vector& allocation,
                                              double eps, const Region& subset, int n_samples,
                                              std::uint64_t seed, int threads) {
  const int n = economy.n_consumers();
  const int m = economy.n_goods();
  if (subset.dim() != m) fail(Error::Kind::validation, "subset must live in the commodity space");
  if (!(eps > 0.0)) fail(Error::Kind::precondition, "eps must be positive");
  for (int i = 0; i < n; ++i) {
    const Vector xi = economy.bundle(allocation, i);
    const Vector nearest = xi.cwiseMax(subset.lo).cwiseMin(subset.hi);
    if ((nearest - xi).norm() >= eps)
      fail(Error::Kind::empty_intersection,
           "subset misses B(x_i, eps) for consumer " + std::to_string(i + 1));
  }
  std::vector<SearchVerdict> out(static_cast<std::size_t>(n));
  parallel_for(static_cast<std::size_t>(n), threads, [&](std::size_t i) {
    const auto& u = economy.consumers()[i].utility;
    const Vector xi = economy.bundle(allocation, static_cast<int>(i));
    const double base = u.evaluate(xi)(0);
    SearchVerdict v;
    auto consider = [&](const Vector& z) {
      if ((z - xi).norm() > eps || !subset.contains(z)) return;
      const double gain = u.evaluate(z)(0) - base;
      if (gain > 0.0 && gain > v.value) {
        v.witness_found = true;
        v.witness = z;
        v.value = gain;
      }
    };
    const Vector grad = u.gradient(xi);
    if (grad.norm() > 0.0) consider(xi + 0.5 * eps * grad / grad.norm());
    for (int k = 0; k < n_samples && !v.witness_found; ++k) {
      Rng rng = make_rng(seed, stream::nonsatiation, static_cast<std::uint64_t>(i) * 0x100000000ULL + static_cast<std::uint64_t>(k));
      consider(sample_in_ball(rng, xi, eps));
    }
    out[i] = std::move(v);
  });
  return out;
}

std::vector<SearchVerdict> check_a5(const Economy& economy, const Vector& allocation,
                                    const Vector& price, const std::vector<Vector>& distribution,
                                    double eps, int n_samples, std::uint64_t seed, double margin) {
  const int n = economy.n_consumers();
  if (price.size() != economy.n_goods()) fail(Error::Kind::validation, "price has the wrong dimension");
  if (!(price.norm() > 0.0)) fail(Error::Kind::precondition, "price must be nonzero");
  if (static_cast<int>(distribution.size()) != n) fail(Error::Kind::validation, "one endowment share per consumer expected");
  std::vector<SearchVerdict> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Vector xi = economy.bundle(allocation, i);
    const double budget = price.dot(distribution[static_cast<std::size_t>(i)]);
    SearchVerdict& v = out[static_cast<std::size_t>(i)];
    auto consider = [&](const Vector& z) {
      const double undercut = budget - price.dot(z);
      if (undercut >= margin) {
        v.witness_found = true;
        v.witness = z;
        v.value = undercut;
      }
    };
    consider(xi - 0.5 * eps * price / price.norm());
    for (int k = 0; k < n_samples && !v.witness_found; ++k) {
      Rng rng = make_rng(seed, stream::qualification, static_cast<std::uint64_t>(i) * 0x100000000ULL + static_cast<std::uint64_t>(k));
      consider(sample_in_ball(rng, xi, eps));
    }
  }
  return out;
}

}  // namespace locprog::economy
