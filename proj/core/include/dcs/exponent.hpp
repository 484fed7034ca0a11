#pragma once

namespace dcs {

// Conjugate exponent pair (p, q), 1 < p < inf, 1/p + 1/q = 1.
class Exponent {
 public:
  // Throws DomainError unless 1 < p < inf.
  explicit Exponent(double p);

  double p() const noexcept { return p_; }
  double q() const noexcept { return q_; }

  friend bool operator==(const Exponent&, const Exponent&) = default;

 private:
  double p_;
  double q_;
};

}  // namespace dcs
