#pragma once

#include "locprog/linalg.hpp"

#include <cstdint>
#include <random>

namespace locprog {

using Rng = std::mt19937_64;

/// Mixes (seed, stream, index) into an independent generator seed. Every
/// sampled quantity in the library is drawn from a generator seeded this way
/// so results do not depend on evaluation order or thread count.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index = 0);

inline Rng make_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index = 0) {
  return Rng(derive_seed(seed, stream, index));
}

double uniform01(Rng& rng);
Vector random_direction(Rng& rng, Eigen::Index dim);
Vector sample_in_ball(Rng& rng, const Vector& center, double radius);
Vector sample_on_sphere(Rng& rng, const Vector& center, double radius);

// Stream identifiers keep the samplers of different diagnostics apart.
namespace stream {
inline constexpr std::uint64_t convexity_pairs = 1;
inline constexpr std::uint64_t convexity_starts = 2;
inline constexpr std::uint64_t lipschitz = 3;
inline constexpr std::uint64_t support_probe = 4;
inline constexpr std::uint64_t solve_starts = 5;
inline constexpr std::uint64_t certificate = 6;
inline constexpr std::uint64_t feasible_sampler = 7;
inline constexpr std::uint64_t budget = 8;
inline constexpr std::uint64_t nonsatiation = 9;
inline constexpr std::uint64_t qualification = 10;
inline constexpr std::uint64_t jacobian_points = 11;
}  // namespace stream

}  // namespace locprog
