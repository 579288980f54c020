#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "locprog/error.hpp"
#include "locprog/random.hpp"
#include "locprog/spaces.hpp"

#include <cmath>

using namespace locprog;
using spaces::SpaceSpec;

TEST_CASE("euclidean modulus matches the planar construction") {
  const auto s = SpaceSpec::euclidean(4);
  CHECK(spaces::modulus_of_convexity(s, 0.0) == 0.0);
  CHECK(spaces::modulus_of_convexity(s, 2.0) == doctest::Approx(1.0).epsilon(1e-15));
  // eps = 1: unit vectors 60 degrees apart, midpoint norm cos 30 deg.
  CHECK(std::abs(spaces::modulus_of_convexity(s, 1.0) - (1.0 - std::sqrt(3.0) / 2.0)) < 1e-15);
}

TEST_CASE("modulus is nondecreasing and dominated by the universal upper bound") {
  for (const auto& s : {SpaceSpec::euclidean(2), SpaceSpec::p_norm(3, 1.2), SpaceSpec::p_norm(2, 1.8)}) {
    double prev = 0.0;
    for (int i = 0; i <= 400; ++i) {
      const double eps = 2.0 * i / 400.0;
      const double d = spaces::modulus_of_convexity(s, eps);
      CHECK(d >= prev - 1e-16);
      CHECK(d <= spaces::nordlander_bound(eps) + 1e-16);
      CHECK(d >= spaces::quadratic_growth_constant(s) * eps * eps - 1e-16);
      prev = d;
    }
  }
}

TEST_CASE("quadratic growth constants") {
  CHECK(spaces::quadratic_growth_constant(SpaceSpec::euclidean(3)) == 0.125);
  CHECK(spaces::quadratic_growth_constant(SpaceSpec::p_norm(2, 1.5)) == 0.0625);
}

TEST_CASE("space validation") {
  CHECK_THROWS_WITH_AS(SpaceSpec::p_norm(2, 2.5), "p must lie in (1,2)", Error);
  CHECK_THROWS_AS(SpaceSpec::p_norm(2, 1.0), Error);
  CHECK_THROWS_AS(SpaceSpec::euclidean(0), Error);
  CHECK_THROWS_AS(spaces::Ball(Vector::Zero(2), -1.0), Error);
  CHECK_THROWS_AS(spaces::Ball(SpaceSpec::euclidean(3), Vector::Zero(2), 1.0), Error);
}

TEST_CASE("p-norm evaluation") {
  Vector x(2);
  x << 3, -4;
  CHECK(SpaceSpec::euclidean(2).norm(x) == doctest::Approx(5.0));
  CHECK(SpaceSpec::p_norm(2, 1.5).norm(x) == doctest::Approx(std::pow(std::pow(3, 1.5) + 8.0, 1.0 / 1.5)));
}

TEST_CASE("ball projection is a nearest point") {
  auto rng = make_rng(3, 99);
  const spaces::Ball ball(Vector::Constant(3, 0.5), 0.7);
  for (int i = 0; i < 200; ++i) {
    const Vector p = sample_in_ball(rng, Vector::Zero(3), 3.0);
    const Vector q = spaces::project_to_ball(ball, p);
    CHECK(ball.contains(q, 1e-12));
    for (int k = 0; k < 20; ++k) {
      const Vector z = sample_in_ball(rng, ball.center, ball.radius);
      CHECK((p - q).norm() <= (p - z).norm() + 1e-12);
    }
  }
}

TEST_CASE("product space norm") {
  const spaces::ProductSpaceSpec prod(SpaceSpec::euclidean(2), 3);
  CHECK(prod.dimension() == 6);
  Vector x(6);
  x << 3, 4, 0, 0, 0, 12;
  CHECK(prod.norm(x) == doctest::Approx(13.0));
  CHECK_THROWS_AS(prod.norm(Vector::Zero(5)), Error);
}
