#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"

using namespace testsupport;
using locprog::Error;
using vopt::Localization;

namespace {
const double kRoot = std::sqrt(0.5);

Localization r3(double eps = 1.0) { return Localization(r3_benchmark(), Vector::Zero(3), eps); }
}  // namespace

TEST_CASE("localization validation") {
  CHECK_THROWS_WITH_AS(Localization(r3_benchmark(), Vector::Zero(2), 1.0), "x0 has the wrong dimension", Error);
  CHECK_THROWS_AS(Localization(r3_benchmark(), Vector::Zero(3), 0.0), Error);
  CHECK_THROWS_WITH_AS(Localization(r3_benchmark(), vec({0, 0, 0.5}), 1.0), "x0 is not feasible: g(x0) is not in C",
                       Error);
  const auto bounded = vopt::VectorProblem(r3_benchmark().h(), r3_benchmark().g(), vopt::ConstraintSet::singleton_zero(1),
                                           vopt::ConeSpec::nonneg_orthant(2),
                                           calc::Region::box(Vector::Constant(3, -1), Vector::Constant(3, 1)));
  CHECK_THROWS_WITH_AS(Localization(bounded, Vector::Zero(3), 1.0), "B(x0, eps) is not inside the region", Error);
}

TEST_CASE("equal weights on the R3 benchmark") {
  const auto loc = r3();
  const auto c = vopt::solve_localization(loc, vec({0.5, 0.5}));
  CHECK(c.x_eps.isApprox(vec({kRoot, kRoot, 0}), 1e-8));
  CHECK(c.residuals.boundary_gap <= 1e-6);
  CHECK(c.w_star(0) == doctest::Approx(c.w_star(1)).epsilon(1e-8));
  CHECK(std::abs(c.y_star(0)) <= 1e-8);
  CHECK(c.objective_value == doctest::Approx(kRoot));
  const auto rep = vopt::check_certificate(loc, c, 10000, 42, 1e-6);
  CHECK(rep.pass);
  CHECK(rep.checks.size() == 5);
}

TEST_CASE("results do not depend on the thread count") {
  vopt::SolveConfig one, four;
  four.threads = 4;
  const Localization loc(nonconvex_benchmark(), Vector::Zero(3), 0.5);
  const auto a = vopt::solve_localization(loc, vec({0.3, 0.7}), one);
  const auto b = vopt::solve_localization(loc, vec({0.3, 0.7}), four);
  CHECK(a.x_eps == b.x_eps);
  CHECK(a.start_index == b.start_index);
  const auto ra = vopt::check_certificate(loc, a, 3000, 5, 1e-6, 1);
  const auto rb = vopt::check_certificate(loc, b, 3000, 5, 1e-6, 4);
  for (std::size_t i = 0; i < ra.checks.size(); ++i) CHECK(ra.checks[i].value == rb.checks[i].value);
}

TEST_CASE("degenerate weight picks the axis point") {
  const auto c = vopt::solve_localization(r3(), vec({1, 0}));
  CHECK(c.x_eps.isApprox(vec({1, 0, 0}), 1e-7));
  const auto m = vopt::recover_multipliers(r3(), vec({1, 0, 0}));
  CHECK(m.w_star(1) == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(m.w_star(0) > 0.5);
  CHECK(m.residual <= 1e-9);
}

TEST_CASE("weights outside the dual cone are rejected") {
  CHECK_THROWS_AS(vopt::solve_localization(r3(), vec({1, -0.5})), Error);
  CHECK_THROWS_AS(vopt::solve_localization(r3(), vec({0, 0})), Error);
  CHECK_THROWS_AS(vopt::solve_localization(r3(), vec({1, 0, 0})), Error);
}

TEST_CASE("sweep traces the quarter circle") {
  const auto sweep = vopt::pareto_sweep(r3(), vopt::simplex_weight_grid(2, 10));
  REQUIRE(sweep.certificates.size() == 11);
  CHECK(sweep.annotations.empty());
  for (std::size_t i = 0; i < sweep.certificates.size(); ++i) {
    const auto& x = sweep.certificates[i].x_eps;
    CHECK(std::hypot(x(0), x(1)) == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(std::abs(x(2)) <= 1e-9);
    CHECK(x(0) >= -1e-9);
    CHECK(x(1) >= -1e-9);
    const Vector w = sweep.certificates[i].scalarization_weights;
    CHECK(x.head(2).isApprox(w / w.norm(), 1e-6));
    if (i > 0) CHECK(x(0) >= sweep.certificates[i - 1].x_eps(0));
  }
}

TEST_CASE("simplex grid") {
  const auto g = vopt::simplex_weight_grid(2, 10);
  CHECK(g.size() == 11);
  CHECK(g.front().isApprox(vec({0, 1})));
  CHECK(g.back().isApprox(vec({1, 0})));
  CHECK(vopt::simplex_weight_grid(3, 2).size() == 6);
}

TEST_CASE("nonconvex benchmark matches the grid argmax") {
  const Localization loc(nonconvex_benchmark(), Vector::Zero(3), 0.5);
  const auto c = vopt::solve_localization(loc, vec({0.5, 0.5}));
  const auto oracle = vopt::brute_force_oracle(loc, 161);
  double best = -INFINITY;
  for (const auto& y : oracle.objectives) best = std::max(best, 0.5 * (y(0) + y(1)));
  CHECK(c.objective_value >= best - 1e-4);
  CHECK(c.objective_value - best <= 2 * oracle.pitch);
  CHECK(vopt::check_certificate(loc, c, 5000, 1, 1e-6).pass);
}

TEST_CASE("oracle frontier approximates the quarter circle") {
  const auto o = vopt::brute_force_oracle(r3(), 101);
  REQUIRE(!o.points.empty());
  const double pitch = o.pitch;
  for (const auto& p : o.points) {
    CHECK(std::abs(std::hypot(p(0), p(1)) - 1.0) <= 2 * pitch);
    CHECK(p(0) >= -2 * pitch);
    CHECK(p(1) >= -2 * pitch);
  }
  for (int k = 0; k <= 20; ++k) {
    const double t = M_PI / 2 * k / 20;
    double d = INFINITY;
    for (const auto& p : o.points) d = std::min(d, (p - vec({std::cos(t), std::sin(t), 0})).norm());
    CHECK(d <= 2 * pitch);
  }
  CHECK_THROWS_AS(vopt::brute_force_oracle(
                      Localization(vopt::VectorProblem(calc::identity(5), calc::linear(Matrix::Zero(1, 5)),
                                                       vopt::ConstraintSet::singleton_zero(1),
                                                       vopt::ConeSpec::nonneg_orthant(5)),
                                   Vector::Zero(5), 1.0),
                      10),
                  Error);
}

TEST_CASE("local optimality sampling") {
  const auto loc = r3();
  const auto opt = vopt::check_local_optimality(loc, vec({kRoot, kRoot, 0}), 5000, 3, 1e-6);
  CHECK(opt.status == vopt::LocalOptimalityVerdict::Status::optimal_up_to_sampling);
  CHECK(opt.n_feasible >= 100);
  const auto dom = vopt::check_local_optimality(loc, vec({0.2, 0.1, 0}), 5000, 3, 1e-6);
  CHECK(dom.status == vopt::LocalOptimalityVerdict::Status::dominated);
  REQUIRE(dom.gain);
  CHECK(dom.gain->minCoeff() >= 0.0);
  CHECK_THROWS_AS(vopt::check_local_optimality(loc, vec({0.2, 0.1, 0.3}), 100, 3, 1e-6), Error);
}

TEST_CASE("certificate checks reject an interior candidate") {
  const auto loc = r3();
  vopt::SolutionCertificate c;
  c.x_eps = vec({0.3, 0.3, 0});
  c.w_star = vec({0.5, 0.5});
  c.y_star = vec({0});
  const auto rep = vopt::check_certificate(loc, c, 2000, 1, 1e-6);
  CHECK_FALSE(rep.pass);
  CHECK_FALSE(rep.find("boundary")->pass);
  CHECK_FALSE(rep.find("lagrangian_max")->pass);
  REQUIRE(rep.find("lagrangian_max")->witness);
}

TEST_CASE("center non-optimality") {
  for (double eps : {0.01, 0.1, 1.0}) {
    const auto v = vopt::check_nonoptimality_of_center(r3(eps), 2000, 8, 1e-6);
    CHECK(v.status == vopt::NonoptimalityVerdict::Status::witness_found);
    REQUIRE(v.witness);
    CHECK((*v.witness)(0) > 0);
    CHECK((*v.witness)(1) > 0);
    CHECK(std::abs((*v.witness)(2)) <= 1e-8);
  }
  Matrix degenerate(2, 3);
  degenerate << 1, 0, 0, 1, 0, 0;
  const vopt::VectorProblem p(calc::linear(degenerate), r3_benchmark().g(), vopt::ConstraintSet::singleton_zero(1),
                              vopt::ConeSpec::nonneg_orthant(2));
  CHECK_THROWS_AS(vopt::check_nonoptimality_of_center(Localization(p, Vector::Zero(3), 1.0), 100, 1, 1e-6), Error);
}

TEST_CASE("sufficiency at the analytic certificate") {
  const auto rep = vopt::check_sufficiency(r3(), vec({kRoot, kRoot, 0}), vec({0.5, 0.5}), vec({0}), 5000, 4, 1e-6);
  CHECK(rep.sufficient);
  REQUIRE(rep.cross_validation);
  CHECK(rep.cross_validation->status == vopt::LocalOptimalityVerdict::Status::optimal_up_to_sampling);
  const auto interior = vopt::check_sufficiency(r3(), vec({0.3, 0.3, 0}), vec({0.5, 0.5}), vec({0}), 2000, 4, 1e-6);
  CHECK_FALSE(interior.sufficient);
  CHECK_FALSE(interior.conditions.find("lagrangian_max")->pass);
  const auto zero_weight = vopt::check_sufficiency(r3(), vec({1, 0, 0}), vec({1, 0}), vec({0}), 2000, 4, 1e-6);
  CHECK_FALSE(zero_weight.conditions.find("strict_positivity")->pass);
}
