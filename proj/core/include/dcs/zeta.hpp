#pragma once

#include <cstdint>

#include "dcs/enclosure.hpp"

namespace dcs {

// Explicit terms summed before the integral bracket in tail enclosures.
inline constexpr std::uint64_t kDefaultTailPrefix = 10'000;

// Enclosure of sum_{n > N} n^{-x}. The first `prefix` terms past N are summed
// explicitly; the remainder beyond M = N + prefix is bracketed by
//   (M+1)^{1-x}/(x-1) <= sum_{n > M} n^{-x} <= M^{1-x}/(x-1).
// Throws DomainError for x <= 1 (divergent) or N = 0.
Enclosure zeta_tail(double x, std::uint64_t N, std::uint64_t prefix = kDefaultTailPrefix);

// Enclosure of zeta(x) = sum_{n>=1} n^{-x}: `terms` explicit terms plus the
// bare integral bracket. Width is about x * terms^{-x}.
Enclosure zeta_real(double x, std::uint64_t terms);

// B_k = sum_{j >= k} j^{-x} = k^{-x} + zeta_tail(x, k).
Enclosure zeta_tail_from(double x, std::uint64_t k, std::uint64_t prefix = kDefaultTailPrefix);

// Sum_{n=a}^{b} n^{-x} for 1 <= a, accumulated smallest terms first. Returns 0
// for an empty range.
long double power_sum(double x, std::uint64_t a, std::uint64_t b);

}  // namespace dcs
