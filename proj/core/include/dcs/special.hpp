#pragma once

namespace dcs {

// Principal branch of the Lambert W function on (0, inf): the w with
// w * e^w = x. Halley iteration from log(1 + x); throws InternalError if 50
// steps do not reach |w e^w - x| <= 1e-12 x.
double lambert_w(double x);

// phi(x) = x log x.
double phi(double x);

// (phi^alpha)'(x) = alpha (x log x)^{alpha-1} (log x + 1), for x > 1 and
// 0 < alpha < 1.
double phi_alpha_deriv(double x, double alpha);

// Sign factor of the derivative of phi_alpha_deriv in x:
//   h'(x) = alpha (x log x)^{alpha-2} (log x + 1)^2 * factor.
double phi_alpha_deriv_slope_factor(double x, double alpha);

// Smallest integer x_beta >= 2 such that phi_alpha_deriv(., alpha) is
// nonincreasing on [x_beta - 1, inf) for every alpha <= beta. Found by a log
// grid scan of the slope factor; the factor is unimodal in log x, so no sign
// change can occur past the last grid crossing.
double decrease_onset(double beta);

}  // namespace dcs
