#pragma once

#include <cstdint>
#include <variant>

#include "dcs/coeff_seq.hpp"
#include "dcs/enclosure.hpp"
#include "dcs/exponent.hpp"

namespace dcs {

// b_n = (log n)^{-alpha} for n >= 2, b_1 = 0.
struct LogPower {
  double alpha;
};
// b_n = n^{-beta}.
struct Power {
  double beta;
};

class SequenceSpec {
 public:
  static SequenceSpec finite(CoeffSeq b) { return SequenceSpec(std::move(b)); }
  // Throws DomainError unless alpha > 0.
  static SequenceSpec log_power(double alpha);
  static SequenceSpec power(double beta);

  const std::variant<CoeffSeq, LogPower, Power>& kind() const noexcept { return kind_; }

 private:
  template <typename T>
  explicit SequenceSpec(T kind) : kind_(std::move(kind)) {}

  std::variant<CoeffSeq, LogPower, Power> kind_;
};

enum class SchurVerdict { schur, not_schur, inconclusive };

const char* to_string(SchurVerdict v);

struct SchurResult {
  SchurVerdict verdict = SchurVerdict::inconclusive;
  // schur: enclosure of the full series. Otherwise the partial sum up to the
  // horizon (a lower bound of a divergent or undecided series).
  Enclosure value;
};

// Exponents at most this far above the convergence boundary are undecidable
// in floating point. The boundary itself diverges.
inline constexpr double kSchurBoundaryTol = 1e-12;

// Schur test sum_{n>=1} sup_{k>=n} |b_k|^q / k < inf. Finite sequences are
// summed exactly. For the formula kinds |b_k|^q/k is eventually decreasing, so
// the sup is the current term; the partial sum to `horizon` is closed by an
// integral bracket of the tail when it converges.
SchurResult schur_test(const SequenceSpec& b, const Exponent& e, std::uint64_t horizon);

}  // namespace dcs
