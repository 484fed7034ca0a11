#include "dcs/norms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dcs/errors.hpp"

namespace dcs {

Enclosure ces_norm(const CoeffSeq& a, const Exponent& e, std::uint64_t tail_prefix) {
  if (a.empty()) return {0.0, 0.0};
  const double p = e.p();
  const bool square = p == 2.0;
  const auto entries = a.entries();
  const std::uint64_t first = a.min_index();
  const std::uint64_t last = a.max_index();

  // A_n = 0 before the first support index, so the sum starts there.
  long double prefix = 0.0L;
  long double head = 0.0L;
  std::size_t k = 0;
  for (std::uint64_t n = first; n < last; ++n) {
    if (entries[k].index == n) {
      prefix += std::abs(entries[k].value);
      ++k;
    }
    const double mean = static_cast<double>(prefix / static_cast<long double>(n));
    head += square ? mean * mean : std::pow(mean, p);
  }
  prefix += std::abs(entries.back().value);

  // Every n >= last sees the full sum A_N.
  const Enclosure tail = zeta_tail_from(p, last, tail_prefix);
  const long double scale = std::pow(prefix, static_cast<long double>(p));
  const Enclosure powered(static_cast<double>(head + scale * tail.lo),
                          static_cast<double>(head + scale * tail.hi));
  const std::size_t terms = static_cast<std::size_t>(last - first) + 4;
  const Enclosure widened = widen_for_terms(powered, terms);
  return pow(Enclosure(std::max(0.0, widened.lo), widened.hi), 1.0 / p);
}

double lp_norm(const CoeffSeq& a, double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw DomainError("lp_norm needs 1 <= p < inf");
  long double s = 0.0L;
  for (const auto& x : a.entries()) s += std::pow(std::abs(x.value), p);
  return static_cast<double>(std::pow(s, 1.0L / p));
}

std::vector<double> least_decreasing_majorant(const CoeffSeq& b, std::uint64_t horizon) {
  if (horizon < b.max_index()) {
    throw DomainError("majorant horizon " + std::to_string(horizon) +
                      " is below the largest support index " + std::to_string(b.max_index()));
  }
  std::vector<double> out(horizon, 0.0);
  const auto entries = b.entries();
  double running = 0.0;
  std::size_t k = entries.size();
  for (std::uint64_t n = b.max_index(); n >= 1; --n) {
    if (k > 0 && entries[k - 1].index == n) {
      running = std::max(running, std::abs(entries[k - 1].value));
      --k;
    }
    out[n - 1] = running;
  }
  return out;
}

double dq_norm(const CoeffSeq& b, const Exponent& e) {
  // The majorant is constant on (i_{k-1}, i_k], equal to the suffix maximum
  // starting at entry k.
  const auto entries = b.entries();
  const double q = e.q();
  long double s = 0.0L;
  double suffix_max = 0.0;
  for (std::size_t k = entries.size(); k-- > 0;) {
    suffix_max = std::max(suffix_max, std::abs(entries[k].value));
    const std::uint64_t prev = k == 0 ? 0 : entries[k - 1].index;
    s += static_cast<long double>(entries[k].index - prev) * std::pow(suffix_max, q);
  }
  return static_cast<double>(std::pow(s, 1.0L / q));
}

double ar_norm(const CoeffSeq& a, double r) {
  long double s = 0.0L;
  for (const auto& x : a.entries()) {
    s += std::abs(x.value) * std::pow(static_cast<double>(x.index), -r);
  }
  return static_cast<double>(s);
}

double hardy_ratio(const CoeffSeq& a, const Exponent& e) {
  if (a.empty()) throw DomainError("hardy_ratio of the zero sequence is 0/0");
  return ces_norm(a, e).hi / lp_norm(a, e.p());
}

MNValues m_n_functionals_p2(const CoeffSeq& a) {
  if (a.size() > kMaxMNSupport) {
    throw ResourceError("m_n_functionals_p2 supports at most " + std::to_string(kMaxMNSupport) +
                        " entries, got " + std::to_string(a.size()));
  }
  const auto entries = a.entries();
  long double m2 = 0.0L;
  for (const auto& x : entries) {
    for (const auto& y : entries) {
      m2 += std::abs(x.value) * std::abs(y.value) /
            static_cast<long double>(std::max(x.index, y.index));
    }
  }
  long double n2 = 0.0L;
  long double prefix = 0.0L;
  for (const auto& x : entries) {
    prefix += std::abs(x.value);
    n2 += std::abs(x.value) / static_cast<long double>(x.index) * prefix;
  }
  return {static_cast<double>(std::sqrt(m2)), static_cast<double>(std::sqrt(n2))};
}

}  // namespace dcs
