#include "dcs/schur.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dcs/errors.hpp"
#include "dcs/zeta.hpp"

namespace dcs {

SequenceSpec SequenceSpec::log_power(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("log_power needs alpha > 0");
  return SequenceSpec(LogPower{alpha});
}

SequenceSpec SequenceSpec::power(double beta) {
  if (!std::isfinite(beta)) throw DomainError("power needs a finite beta");
  return SequenceSpec(Power{beta});
}

const char* to_string(SchurVerdict v) {
  switch (v) {
    case SchurVerdict::schur:
      return "schur";
    case SchurVerdict::not_schur:
      return "not_schur";
    case SchurVerdict::inconclusive:
      return "inconclusive";
  }
  return "?";
}

namespace {

SchurResult finite_case(const CoeffSeq& b, double q) {
  // sup_{k>=n} |b_k|^q/k is constant on (i_{j-1}, i_j], equal to the suffix
  // maximum from entry j.
  const auto entries = b.entries();
  long double s = 0.0L;
  double suffix = 0.0;
  for (std::size_t k = entries.size(); k-- > 0;) {
    suffix = std::max(suffix, std::pow(std::abs(entries[k].value), q) /
                                  static_cast<double>(entries[k].index));
    const std::uint64_t prev = k == 0 ? 0 : entries[k - 1].index;
    s += static_cast<long double>(entries[k].index - prev) * suffix;
  }
  const auto v = static_cast<double>(s);
  return {SchurVerdict::schur, widen_for_terms(Enclosure::point(v), 2 * entries.size())};
}

SchurResult log_power_case(double alpha, double q, std::uint64_t horizon) {
  // t_n = 1/(n (log n)^c), c = q alpha, decreasing from n = 2; t_1 = 0, so the
  // n = 1 sup equals t_2.
  const double c = q * alpha;
  auto term = [c](std::uint64_t n) {
    const double x = static_cast<double>(n);
    return 1.0 / (x * std::pow(std::log(x), c));
  };
  long double partial = term(2);
  for (std::uint64_t n = horizon; n >= 2; --n) partial += term(n);
  const auto head = static_cast<double>(partial);
  const Enclosure head_enc = widen_for_terms(Enclosure::point(head), horizon + 1);
  if (c <= 1.0) {
    // sum_{n > H} t_n >= int_{H+1}^inf dx/(x (log x)^c) = inf, also at c = 1.
    return {SchurVerdict::not_schur, head_enc};
  }
  if (c - 1.0 <= kSchurBoundaryTol) return {SchurVerdict::inconclusive, head_enc};
  const double h = static_cast<double>(horizon);
  const double tail_lo = std::pow(std::log(h + 1.0), 1.0 - c) / (c - 1.0);
  const double tail_hi = std::pow(std::log(h), 1.0 - c) / (c - 1.0);
  return {SchurVerdict::schur,
          widen_for_terms(Enclosure(head_enc.lo + tail_lo, head_enc.hi + tail_hi), 4)};
}

SchurResult power_case(double beta, double q, std::uint64_t horizon) {
  // t_n = n^{-(q beta + 1)}.
  const double x = q * beta + 1.0;
  long double partial = power_sum(x, 1, horizon);
  const Enclosure head_enc =
      widen_for_terms(Enclosure::point(static_cast<double>(partial)), horizon + 1);
  // x <= 0: t_n does not decrease and the sups are infinite or constant;
  // 0 < x <= 1: harmonic-type divergence.
  if (x <= 1.0) return {SchurVerdict::not_schur, head_enc};
  if (x - 1.0 <= kSchurBoundaryTol) return {SchurVerdict::inconclusive, head_enc};
  const Enclosure tail = zeta_tail(x, horizon);
  return {SchurVerdict::schur, head_enc + tail};
}

}  // namespace

SchurResult schur_test(const SequenceSpec& b, const Exponent& e, std::uint64_t horizon) {
  if (horizon < 2) throw DomainError("schur_test needs horizon >= 2");
  const double q = e.q();
  return std::visit(
      [&](const auto& kind) -> SchurResult {
        using T = std::decay_t<decltype(kind)>;
        if constexpr (std::is_same_v<T, CoeffSeq>) {
          return finite_case(kind, q);
        } else if constexpr (std::is_same_v<T, LogPower>) {
          return log_power_case(kind.alpha, q, horizon);
        } else {
          return power_case(kind.beta, q, horizon);
        }
      },
      b.kind());
}

}  // namespace dcs
