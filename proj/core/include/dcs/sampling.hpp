#pragma once

#include <cstdint>
#include <random>

#include "dcs/coeff_seq.hpp"

namespace dcs {

// Deterministic generator used by every randomized campaign.
using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 42;

// Uniform double in [0, 1) from the top 53 bits (platform independent).
double uniform01(Rng& rng);
// Uniform integer in [lo, hi].
std::uint64_t uniform_int(Rng& rng, std::uint64_t lo, std::uint64_t hi);

struct SampleShape {
  std::size_t max_support = 8;     // support size drawn from [1, max_support]
  std::uint64_t max_index = 32;    // indices drawn from [1, max_index]
  bool complex_values = true;      // else nonnegative reals
  bool integer_values = false;     // values in {-3..3} \ {0} (real)
};

// Random nonzero finitely supported sequence with the given shape.
CoeffSeq random_coeffs(Rng& rng, const SampleShape& shape);

// Seed for the i-th independent task derived from a campaign seed.
std::uint64_t task_seed(std::uint64_t seed, std::uint64_t i);

}  // namespace dcs
