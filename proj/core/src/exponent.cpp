#include "dcs/exponent.hpp"

#include <cmath>
#include <string>

#include "dcs/errors.hpp"

namespace dcs {

Exponent::Exponent(double p) : p_(p), q_(0.0) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw DomainError("exponent p must satisfy 1 < p < inf, got " + std::to_string(p));
  }
  q_ = p / (p - 1.0);
  if (std::abs(1.0 / p_ + 1.0 / q_ - 1.0) > 1e-15) {
    throw DomainError("conjugate exponent not representable for p = " + std::to_string(p));
  }
}

}  // namespace dcs
