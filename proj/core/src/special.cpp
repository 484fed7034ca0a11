#include "dcs/special.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dcs/errors.hpp"

namespace dcs {

double lambert_w(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("lambert_w is defined here only for x > 0 (principal branch)");
  }
  const double tol = 1e-12 * x;
  double w = std::log1p(x);
  for (int step = 0; step < 50; ++step) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    if (std::abs(f) <= tol) return w;
    const double wp1 = w + 1.0;
    const double next = w - f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
    if (next == w) {
      // Stalled at a floating-point fixed point; accept only if the residual
      // is at rounding level.
      if (std::abs(f) <= 8.0 * tol) return w;
      break;
    }
    w = next;
  }
  throw InternalError("lambert_w failed to converge for x = " + std::to_string(x));
}

double phi(double x) { return x * std::log(x); }

double phi_alpha_deriv(double x, double alpha) {
  if (!(x > 1.0)) throw DomainError("phi_alpha_deriv needs x > 1");
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("phi_alpha_deriv needs 0 < alpha < 1");
  const double lx = std::log(x);
  return alpha * std::pow(x * lx, alpha - 1.0) * (lx + 1.0);
}

double phi_alpha_deriv_slope_factor(double x, double alpha) {
  const double lx = std::log(x);
  return alpha - 1.0 + lx / ((lx + 1.0) * (lx + 1.0));
}

double decrease_onset(double beta) {
  if (!(beta > 0.0 && beta < 1.0)) throw DomainError("decrease_onset needs 0 < beta < 1");
  // Scan x = 1.001^k over (1, 1e300]; record the last grid point with a
  // positive factor.
  double last_positive = 1.0;
  for (double x = 1.001; x < 1e300; x *= 1.001) {
    if (phi_alpha_deriv_slope_factor(x, beta) > 0.0) last_positive = x;
    // Past the maximum at log x = 1 the factor only decreases.
    if (std::log(x) > 1.0 && phi_alpha_deriv_slope_factor(x, beta) < 0.0) break;
  }
  const double onset = last_positive * 1.001;
  return std::max(2.0, std::ceil(onset) + 1.0);
}

}  // namespace dcs
