#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace dcs {

// All primes up to `limit`, ascending. Index r in the mathematical sense
// (p_1 = 2, p_2 = 3, ...) maps to nth(r).
class PrimeTable {
 public:
  PrimeTable(std::uint64_t limit, std::vector<std::uint32_t> primes);

  std::uint64_t limit() const noexcept { return limit_; }
  std::span<const std::uint32_t> primes() const noexcept { return primes_; }
  std::size_t count() const noexcept { return primes_.size(); }

  // p_r for 1 <= r <= count(); throws DomainError otherwise.
  std::uint64_t nth(std::size_t r) const;

  // Number of primes <= x (x may exceed limit; then the answer is count()).
  std::size_t pi(std::uint64_t x) const noexcept;

 private:
  std::uint64_t limit_;
  std::vector<std::uint32_t> primes_;
};

inline constexpr std::uint64_t kMaxSieveLimit = 1'000'000'000;
inline constexpr std::uint64_t kSegmentedThreshold = 100'000'000;

// Sieve of Eratosthenes over odd numbers. Above kSegmentedThreshold the sieve
// runs segment by segment so that working memory stays bounded.
// Throws DomainError unless 2 <= limit <= kMaxSieveLimit.
PrimeTable sieve_primes(std::uint64_t limit);

namespace detail {
PrimeTable sieve_plain(std::uint64_t limit);
PrimeTable sieve_segmented(std::uint64_t limit, std::size_t segment_bytes);
}  // namespace detail

// True iff every prime factor of n is among the first r primes (n = 1 always
// qualifies). Requires table.count() >= r.
bool smooth_membership(std::uint64_t n, std::size_t r, const PrimeTable& table);

}  // namespace dcs
