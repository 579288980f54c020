#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"

#include "locprog/random.hpp"

using namespace testsupport;
using locprog::Error;

TEST_CASE("catalog values") {
  Matrix a(2, 2);
  a << 1, 2, 3, 4;
  CHECK(calc::affine(a, vec({1, -1})).evaluate(vec({1, 1})).isApprox(vec({4, 6})));
  Matrix q(2, 2);
  q << 1, 0.5, 0.5, 2;
  // x'Qx + a'x + c at (1, 2): 1 + 2 + 8 + 1 - 2 + 3
  CHECK(calc::quadratic(q, vec({1, -1}), 3).evaluate(vec({1, 2}))(0) == doctest::Approx(13.0));
  CHECK(calc::polynomial({{1, 0, 2, 0, 0}}).evaluate(vec({3}))(0) == doctest::Approx(19.0));
  CHECK(calc::logsum(vec({1, 1}), 0).evaluate(vec({0, 0}))(0) == doctest::Approx(std::log(2.0)));
  const Vector p = calc::polar().evaluate(vec({1, M_PI / 2}));
  CHECK(p(0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(p(1) == doctest::Approx(2.0));
  CHECK(calc::scale(calc::identity(2), -2).evaluate(vec({1, 2})).isApprox(vec({-2, -4})));
  CHECK(calc::translate(calc::identity(2), vec({1, 1})).evaluate(vec({1, 2})).isApprox(vec({2, 3})));
  const auto st = calc::stack({calc::identity(2), calc::logsum(vec({1, 0}))});
  CHECK(st.codomain_dim() == 3);
}

TEST_CASE("every catalog Jacobian agrees with central differences") {
  auto rng = locprog::make_rng(5, locprog::stream::jacobian_points);
  for (const auto& [name, map] : catalog_maps()) {
    CAPTURE(name);
    CHECK(map.jacobian_source() == calc::JacobianSource::analytic);
    for (int i = 0; i < 25; ++i) {
      const Vector x = locprog::sample_in_ball(rng, Vector::Zero(map.domain_dim()), 1.5);
      const auto c = calc::check_jacobian(map, x, 1e-5);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("code-defined maps fall back to central differences") {
  auto f = calc::SmoothMap::from_functions(2, 1, [](const Vector& x) { return Vector::Constant(1, std::sin(x(0)) * x(1)); });
  CHECK(f.jacobian_source() == calc::JacobianSource::central_difference);
  const Matrix j = f.jacobian(vec({0.3, 2.0}));
  CHECK(j(0, 0) == doctest::Approx(std::cos(0.3) * 2.0).epsilon(1e-7));
  CHECK(j(0, 1) == doctest::Approx(std::sin(0.3)).epsilon(1e-7));
  CHECK_THROWS_AS(calc::check_jacobian(f, vec({0, 0}), 1e-5), Error);
}

TEST_CASE("regions and dimension checks") {
  const auto f = calc::identity(2).with_region(calc::Region::box(vec({-1, -1}), vec({1, 1})));
  CHECK_THROWS_AS(f.evaluate(vec({1.5, 0})), Error);
  CHECK_THROWS_AS(f.evaluate(vec({0, 0, 0})), Error);
  CHECK(f.region().contains_ball(vec({0, 0}), 0.9));
  CHECK_FALSE(f.region().contains_ball(vec({0, 0}), 1.0));
  CHECK_THROWS_AS(calc::Region::box(vec({0}), vec({0})), Error);
  CHECK_THROWS_AS(calc::compose(calc::identity(3), calc::identity(2)), Error);
  CHECK_THROWS_AS(calc::stack({calc::identity(3), calc::identity(2)}), Error);
  Matrix a(2, 2);
  a << 1, 0, 0, 1;
  CHECK_THROWS_AS(calc::affine(a, vec({1})), Error);
}

TEST_CASE("surjectivity check") {
  Matrix onto(2, 3);
  onto << 1, 0, 0, 0, 1, 0;
  const auto o = calc::surjectivity_check(calc::linear(onto), Vector::Zero(3));
  CHECK(o.surjective);
  CHECK(o.sigma == doctest::Approx(1.0));
  Matrix rank1(2, 2);
  rank1 << 1, 2, 2, 4;
  CHECK_FALSE(calc::surjectivity_check(calc::linear(rank1), Vector::Zero(2)).surjective);
  // Polar map at x = -1 collapses the angle direction.
  CHECK_FALSE(calc::surjectivity_check(calc::polar(), vec({-1, 0.3})).surjective);
  CHECK(calc::surjectivity_check(calc::polar(), vec({0, 0})).surjective);
}

TEST_CASE("derivative Lipschitz estimate") {
  const locprog::spaces::Ball ball(Vector::Zero(2), 1.0);
  Matrix a(1, 2);
  a << 1, 1;
  CHECK(calc::estimate_derivative_lipschitz(calc::linear(a), ball, 50, 1) == doctest::Approx(0.0));
  Matrix q = Matrix::Identity(2, 2);
  const auto quad = calc::quadratic(q, vec({0, 0}), 0);
  double prev = 0.0;
  for (int n : {10, 40, 160}) {
    const double l = calc::estimate_derivative_lipschitz(quad, ball, n, 4);
    CHECK(l >= prev);
    CHECK(l <= 2.0 + 1e-9);  // D(x'x) = 2x'
    prev = l;
  }
  CHECK(prev == doctest::Approx(2.0).epsilon(1e-6));
}
