#include "dcs/point_eval.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dcs/errors.hpp"
#include "dcs/zeta.hpp"

namespace dcs {

DeltaBounds delta_norm_bounds(double sigma, const Exponent& e) {
  const double q = e.q();
  if (!(sigma > 1.0 / q) || !std::isfinite(sigma)) {
    throw DomainError("point evaluation is unbounded for sigma = " + std::to_string(sigma) +
                      " <= 1/q = " + std::to_string(1.0 / q));
  }
  const Enclosure z = zeta_real(sigma * q, kPointEvalZetaTerms);
  const double factor = std::min(sigma, std::pow(e.p() - 1.0, 1.0 / e.p()));
  return {widen_down(std::pow(z.lo, 1.0 / q) / q, 4), widen_up(factor * std::pow(z.hi, 1.0 / q), 4)};
}

Enclosure delta_norm_exact_p2(double sigma, std::uint64_t terms) {
  if (!(sigma > 0.5 && sigma <= 1.0)) {
    throw DomainError("delta_norm_exact_p2 needs 1/2 < sigma <= 1, got " + std::to_string(sigma));
  }
  if (terms == 0) throw DomainError("delta_norm_exact_p2 needs terms >= 1");
  long double head = 0.0L;
  for (std::uint64_t n = terms; n >= 1; --n) {
    // n (n^{-s} - (n+1)^{-s}) = -n^{1-s} expm1(-s log1p(1/n)), free of cancellation.
    const double x = static_cast<double>(n);
    const double d = -std::pow(x, 1.0 - sigma) * std::expm1(-sigma * std::log1p(1.0 / x));
    head += static_cast<long double>(d) * d;
  }
  // sum_{n > terms} (n+1)^{-2 sigma} = sum_{k > terms + 1} k^{-2 sigma}.
  const Enclosure tail = zeta_tail(2.0 * sigma, terms + 1);
  const double low_factor = std::pow(std::exp2(sigma) - 1.0, 2.0);
  const double high_factor = sigma * sigma;
  const Enclosure squared(static_cast<double>(head + low_factor * tail.lo),
                          static_cast<double>(head + high_factor * tail.hi));
  return sqrt(widen_for_terms(squared, 4 * terms + 8));
}

double sigma_threshold(const Exponent& e) {
  const double p = e.p();
  const double zeta_p = zeta_real(p, kPointEvalZetaTerms).mid();
  return p - 1.0 + (std::log(p - 1.0) + std::log(zeta_p)) / std::log(2.0);
}

}  // namespace dcs
