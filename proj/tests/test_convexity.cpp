#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"

#include "locprog/convexity.hpp"

using namespace testsupport;
using locprog::Error;
namespace conv = locprog::convexity;

namespace {
conv::ConvexityOptions options(int pairs, std::uint64_t seed, int threads = 1) {
  conv::ConvexityOptions o;
  o.n_pairs = pairs;
  o.seed = seed;
  o.threads = threads;
  return o;
}
}  // namespace

TEST_CASE("linear images of balls are convex at every radius") {
  Matrix a(2, 4);
  a << 1, 0, 2, -1, 0, 1, 1, 3;
  for (double eps : {1e-4, 1.0, 100.0}) {
    const auto r = conv::midpoint_convexity_residual(calc::linear(a), Vector::Zero(4), eps, options(200, 1));
    CHECK(r.pass);
    CHECK(r.worst_midpoint_residual <= 1e-9 * std::max(1.0, eps));
    CHECK_FALSE(r.witness_pair);
  }
}

TEST_CASE("polar map: convex for small radii, not for large ones") {
  const auto small = conv::midpoint_convexity_residual(calc::polar(), vec({0, 0}), 0.25, options(400, 2));
  CHECK(small.pass);
  const auto large = conv::midpoint_convexity_residual(calc::polar(), vec({0, 0}), 2.5, options(400, 2));
  CHECK_FALSE(large.pass);
  CHECK(large.worst_midpoint_residual > 1e-3);
  REQUIRE(large.witness_pair);
  CHECK(large.witness_pair->first.size() == 2);
}

TEST_CASE("a failing radius never passes at twice the radius") {
  for (double eps : {0.7, 0.9, 1.2, 1.5}) {
    const auto r = conv::midpoint_convexity_residual(calc::polar(), vec({0, 0}), eps, options(300, 3));
    if (!r.pass) CHECK_FALSE(conv::midpoint_convexity_residual(calc::polar(), vec({0, 0}), 2 * eps, options(300, 3)).pass);
  }
}

TEST_CASE("radius estimate brackets the raster oracle transition") {
  const double oracle = PolarRasterOracle(vec({0, 0}), 720).transition_radius(0.05, 3.0);
  CHECK(oracle == doctest::Approx(0.6596).epsilon(1e-3));
  const auto est = conv::estimate_convexity_radius(calc::polar(), vec({0, 0}), 3.0, 1e-6, 0, 400);
  CHECK_FALSE(est.unbounded_in_window);
  REQUIRE(est.failing_radius);
  CHECK(est.radius < *est.failing_radius);
  CHECK(std::abs(est.radius - oracle) / oracle < 0.1);
}

TEST_CASE("affine maps are convex in the whole window") {
  Matrix a(2, 2);
  a << 1, 1, -1, 1;
  const auto est = conv::estimate_convexity_radius(calc::affine(a, vec({1, 2})), vec({0, 0}), 5.0, 1e-6, 0, 100);
  CHECK(est.unbounded_in_window);
  CHECK(est.radius == 5.0);
}

TEST_CASE("boundary preimages of support maximizers lie on the sphere") {
  const auto r = conv::boundary_preimage_check(calc::polar(), vec({0, 0}), 0.3, 64, 5, 1e-5);
  CHECK(r.pass);
  CHECK(r.n_probes == 64);
  CHECK(r.max_interior_gap <= 1e-5);
}

TEST_CASE("non-onto derivative is a precondition error") {
  Matrix rank1(2, 2);
  rank1 << 1, 2, 2, 4;
  CHECK_THROWS_AS(conv::midpoint_convexity_residual(calc::linear(rank1), vec({0, 0}), 1.0, options(10, 0)), Error);
}

TEST_CASE("reports depend on the seed only, not on the thread count") {
  const auto a = conv::midpoint_convexity_residual(calc::polar(), vec({0.1, 0}), 1.0, options(200, 9, 1));
  const auto b = conv::midpoint_convexity_residual(calc::polar(), vec({0.1, 0}), 1.0, options(200, 9, 3));
  CHECK(a.worst_midpoint_residual == b.worst_midpoint_residual);
  CHECK(a.pass == b.pass);
  CHECK(a.witness_index == b.witness_index);
}

TEST_CASE("codomain translation leaves the report unchanged") {
  const auto f = calc::polar();
  const auto g = calc::translate(f, vec({-7, 2}));
  const auto a = conv::midpoint_convexity_residual(f, vec({0, 0}), 1.8, options(200, 4));
  const auto b = conv::midpoint_convexity_residual(g, vec({0, 0}), 1.8, options(200, 4));
  CHECK(a.pass == b.pass);
  CHECK(std::abs(a.worst_midpoint_residual - b.worst_midpoint_residual) <= 1e-12);
}
