#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace dcs {

using Complex = std::complex<double>;

struct CoeffEntry {
  std::uint64_t index;
  Complex value;

  friend bool operator==(const CoeffEntry&, const CoeffEntry&) = default;
};

// Finitely supported coefficient sequence (a_n)_{n>=1}, stored sparsely.
// Invariants: indices strictly increasing and >= 1, no stored zeros.
class CoeffSeq {
 public:
  CoeffSeq() = default;

  // Entries in any order. Zeros are dropped; throws InputError on a duplicate
  // index or index 0.
  static CoeffSeq from_entries(std::vector<CoeffEntry> entries);
  // Entries already strictly ascending; zeros are dropped. Throws InputError
  // if the order is violated.
  static CoeffSeq from_sorted(std::vector<CoeffEntry> entries);

  // n^{-s} scaled by `value`.
  static CoeffSeq monomial(std::uint64_t n, Complex value = 1.0);
  // sum_{n<=N} n^{-s}.
  static CoeffSeq ones(std::uint64_t N);
  // Real coefficients values[k] at index k + 1.
  static CoeffSeq dense(std::span<const double> values);

  std::span<const CoeffEntry> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  // Largest support index, 0 for the zero sequence.
  std::uint64_t max_index() const noexcept { return entries_.empty() ? 0 : entries_.back().index; }
  std::uint64_t min_index() const noexcept { return entries_.empty() ? 0 : entries_.front().index; }
  // a_n, zero off the support.
  Complex at(std::uint64_t n) const noexcept;

  CoeffSeq scaled(Complex lambda) const;
  // |a_n| entrywise.
  CoeffSeq magnitudes() const;

  friend bool operator==(const CoeffSeq&, const CoeffSeq&) = default;

 private:
  explicit CoeffSeq(std::vector<CoeffEntry> entries) : entries_(std::move(entries)) {}

  std::vector<CoeffEntry> entries_;
};

}  // namespace dcs
