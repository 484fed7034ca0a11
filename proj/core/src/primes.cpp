#include "dcs/primes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dcs/errors.hpp"

namespace dcs {

PrimeTable::PrimeTable(std::uint64_t limit, std::vector<std::uint32_t> primes)
    : limit_(limit), primes_(std::move(primes)) {}

std::uint64_t PrimeTable::nth(std::size_t r) const {
  if (r == 0 || r > primes_.size()) {
    throw DomainError("prime index " + std::to_string(r) + " outside table of " +
                      std::to_string(primes_.size()) + " primes");
  }
  return primes_[r - 1];
}

std::size_t PrimeTable::pi(std::uint64_t x) const noexcept {
  if (x >= limit_) return primes_.size();
  const auto it = std::upper_bound(primes_.begin(), primes_.end(), x,
                                   [](std::uint64_t v, std::uint32_t p) { return v < p; });
  return static_cast<std::size_t>(it - primes_.begin());
}

namespace {

void check_limit(std::uint64_t limit) {
  if (limit < 2 || limit > kMaxSieveLimit) {
    throw DomainError("sieve limit must lie in [2, 1e9], got " + std::to_string(limit));
  }
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Rough count estimate used to reserve the output vector.
std::size_t reserve_hint(std::uint64_t limit) {
  const double x = static_cast<double>(limit);
  return static_cast<std::size_t>(1.26 * x / std::log(std::max(x, 3.0))) + 16;
}

}  // namespace

namespace detail {

PrimeTable sieve_plain(std::uint64_t limit) {
  check_limit(limit);
  // composite[i] describes the odd number 2i + 1.
  const std::uint64_t half = (limit - 1) / 2 + 1;
  std::vector<bool> composite(half, false);
  const std::uint64_t root = isqrt(limit);
  for (std::uint64_t i = 1; 2 * i + 1 <= root; ++i) {
    if (composite[i]) continue;
    const std::uint64_t p = 2 * i + 1;
    for (std::uint64_t j = p * p / 2; j < half; j += p) composite[j] = true;
  }
  std::vector<std::uint32_t> primes;
  primes.reserve(reserve_hint(limit));
  primes.push_back(2);
  for (std::uint64_t i = 1; i < half; ++i) {
    if (!composite[i]) primes.push_back(static_cast<std::uint32_t>(2 * i + 1));
  }
  return PrimeTable(limit, std::move(primes));
}

PrimeTable sieve_segmented(std::uint64_t limit, std::size_t segment_bytes) {
  check_limit(limit);
  if (segment_bytes == 0) throw DomainError("segment size must be positive");
  const std::uint64_t root = isqrt(limit);
  const PrimeTable base = sieve_plain(std::max<std::uint64_t>(root, 2));

  std::vector<std::uint32_t> primes;
  primes.reserve(reserve_hint(limit));
  primes.push_back(2);

  // Odd numbers only: slot k in a segment starting at odd `lo` is lo + 2k.
  const std::uint64_t span_len = static_cast<std::uint64_t>(segment_bytes);
  std::vector<unsigned char> composite(span_len);
  // next[i] holds the next odd multiple of base prime i still to be crossed out.
  std::vector<std::uint64_t> next;
  for (const std::uint32_t p : base.primes()) {
    if (p == 2) continue;
    next.push_back(static_cast<std::uint64_t>(p) * p);
  }

  for (std::uint64_t lo = 3; lo <= limit; lo += 2 * span_len) {
    const std::uint64_t hi = std::min<std::uint64_t>(limit, lo + 2 * span_len - 1);
    const std::uint64_t slots = (hi - lo) / 2 + 1;
    std::fill(composite.begin(), composite.begin() + static_cast<std::ptrdiff_t>(slots), 0);
    std::size_t k = 0;
    for (const std::uint32_t p32 : base.primes()) {
      if (p32 == 2) continue;
      const std::uint64_t p = p32;
      std::uint64_t m = next[k];
      for (; m <= hi; m += 2 * p) composite[(m - lo) / 2] = 1;
      next[k] = m;
      ++k;
    }
    for (std::uint64_t s = 0; s < slots; ++s) {
      if (!composite[s]) primes.push_back(static_cast<std::uint32_t>(lo + 2 * s));
    }
  }
  return PrimeTable(limit, std::move(primes));
}

}  // namespace detail

PrimeTable sieve_primes(std::uint64_t limit) {
  check_limit(limit);
  if (limit <= kSegmentedThreshold) return detail::sieve_plain(limit);
  return detail::sieve_segmented(limit, std::size_t{1} << 22);
}

bool smooth_membership(std::uint64_t n, std::size_t r, const PrimeTable& table) {
  if (n == 0) throw DomainError("smooth_membership needs n >= 1");
  if (n == 1) return true;
  if (r > table.count()) {
    throw DomainError("prime table holds " + std::to_string(table.count()) +
                      " primes, fewer than r = " + std::to_string(r));
  }
  for (std::size_t i = 0; i < r; ++i) {
    const std::uint64_t p = table.primes()[i];
    if (p * p > n) {
      // n has no prime factor below p, so n itself is prime (or 1).
      return n == 1 || n <= table.primes()[r - 1];
    }
    while (n % p == 0) n /= p;
    if (n == 1) return true;
  }
  return n == 1;
}

}  // namespace dcs
