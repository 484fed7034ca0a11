#include "dcs/coeff_seq.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dcs/errors.hpp"

namespace dcs {

CoeffSeq CoeffSeq::from_sorted(std::vector<CoeffEntry> entries) {
  std::vector<CoeffEntry> kept;
  kept.reserve(entries.size());
  std::uint64_t prev = 0;
  for (const auto& e : entries) {
    if (e.index == 0) throw InputError("coefficient index must be >= 1");
    if (e.index <= prev) {
      throw InputError("coefficient indices must be strictly increasing (index " +
                       std::to_string(e.index) + " after " + std::to_string(prev) + ")");
    }
    if (!std::isfinite(e.value.real()) || !std::isfinite(e.value.imag())) {
      throw InputError("non-finite coefficient at index " + std::to_string(e.index));
    }
    prev = e.index;
    if (e.value != Complex(0.0, 0.0)) kept.push_back(e);
  }
  return CoeffSeq(std::move(kept));
}

CoeffSeq CoeffSeq::from_entries(std::vector<CoeffEntry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const CoeffEntry& a, const CoeffEntry& b) { return a.index < b.index; });
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (entries[i].index == entries[i - 1].index) {
      throw InputError("duplicate coefficient index " + std::to_string(entries[i].index));
    }
  }
  return from_sorted(std::move(entries));
}

CoeffSeq CoeffSeq::monomial(std::uint64_t n, Complex value) {
  return from_sorted({{n, value}});
}

CoeffSeq CoeffSeq::ones(std::uint64_t N) {
  std::vector<CoeffEntry> e;
  e.reserve(N);
  for (std::uint64_t n = 1; n <= N; ++n) e.push_back({n, 1.0});
  return CoeffSeq(std::move(e));
}

CoeffSeq CoeffSeq::dense(std::span<const double> values) {
  std::vector<CoeffEntry> e;
  for (std::size_t k = 0; k < values.size(); ++k) e.push_back({k + 1, values[k]});
  return from_sorted(std::move(e));
}

Complex CoeffSeq::at(std::uint64_t n) const noexcept {
  const auto it = std::lower_bound(entries_.begin(), entries_.end(), n,
                                   [](const CoeffEntry& e, std::uint64_t v) { return e.index < v; });
  if (it == entries_.end() || it->index != n) return 0.0;
  return it->value;
}

CoeffSeq CoeffSeq::scaled(Complex lambda) const {
  std::vector<CoeffEntry> e(entries_.begin(), entries_.end());
  for (auto& x : e) x.value *= lambda;
  return from_sorted(std::move(e));
}

CoeffSeq CoeffSeq::magnitudes() const {
  std::vector<CoeffEntry> e(entries_.begin(), entries_.end());
  for (auto& x : e) x.value = std::abs(x.value);
  return CoeffSeq(std::move(e));
}

}  // namespace dcs
