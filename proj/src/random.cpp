#include "locprog/random.hpp"

#include <cmath>

namespace locprog {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  return splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ index);
}

double uniform01(Rng& rng) {
  // 53 random bits; avoids the implementation-defined uniform_real_distribution.
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Vector random_direction(Rng& rng, Eigen::Index dim) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector v(dim);
  double norm = 0.0;
  do {
    for (Eigen::Index i = 0; i < dim; ++i) v(i) = normal(rng);
    norm = v.norm();
  } while (norm < 1e-300);
  return v / norm;
}

Vector sample_in_ball(Rng& rng, const Vector& center, double radius) {
  const Eigen::Index dim = center.size();
  const double r = radius * std::pow(uniform01(rng), 1.0 / static_cast<double>(dim));
  return center + r * random_direction(rng, dim);
}

Vector sample_on_sphere(Rng& rng, const Vector& center, double radius) {
  return center + radius * random_direction(rng, center.size());
}

}  // namespace locprog
