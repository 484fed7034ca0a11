#include "dcs/sampling.hpp"

#include <algorithm>
#include <complex>
#include <limits>
#include <vector>

#include "dcs/errors.hpp"

namespace dcs {

double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::uint64_t uniform_int(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  if (hi < lo) throw DomainError("uniform_int with empty range");
  const std::uint64_t span = hi - lo + 1;
  if (span == 0) return rng();
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + x % span;
}

CoeffSeq random_coeffs(Rng& rng, const SampleShape& shape) {
  if (shape.max_support == 0 || shape.max_index == 0) {
    throw DomainError("random_coeffs needs a nonempty shape");
  }
  const std::size_t want =
      static_cast<std::size_t>(uniform_int(rng, 1, std::min<std::uint64_t>(shape.max_support, shape.max_index)));
  std::vector<std::uint64_t> idx;
  while (idx.size() < want) {
    const std::uint64_t n = uniform_int(rng, 1, shape.max_index);
    if (std::find(idx.begin(), idx.end(), n) == idx.end()) idx.push_back(n);
  }
  std::vector<CoeffEntry> e;
  for (const auto n : idx) {
    Complex v;
    if (shape.integer_values) {
      const auto k = static_cast<std::int64_t>(uniform_int(rng, 0, 5));
      v = static_cast<double>(k < 3 ? k - 3 : k - 2);  // {-3,-2,-1,1,2,3}
    } else if (shape.complex_values) {
      v = std::polar(0.05 + uniform01(rng), 2.0 * 3.141592653589793 * uniform01(rng));
    } else {
      v = 0.05 + uniform01(rng);
    }
    e.push_back({n, v});
  }
  return CoeffSeq::from_entries(std::move(e));
}

std::uint64_t task_seed(std::uint64_t seed, std::uint64_t i) {
  // splitmix64 finalizer over (seed, i).
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (i + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace dcs
