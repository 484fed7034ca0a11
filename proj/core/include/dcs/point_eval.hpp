#pragma once

#include <cstdint>

#include "dcs/enclosure.hpp"
#include "dcs/exponent.hpp"

namespace dcs {

// Explicit terms used for zeta(sigma q) in the point-evaluation bounds.
inline constexpr std::uint64_t kPointEvalZetaTerms = 1'000'000;

struct DeltaBounds {
  double lo = 0.0;
  double hi = 0.0;
};

// Bounds on the norm of f -> f(sigma + it) over H(ces_p):
//   lo = (1/q) zeta(sigma q)^{1/q},  hi = min{sigma, (p-1)^{1/p}} zeta(sigma q)^{1/q},
// using the outer endpoints of the zeta enclosure. Throws DomainError for
// sigma <= 1/q.
DeltaBounds delta_norm_bounds(double sigma, const Exponent& e);

// Exact p = 2 point-evaluation norm
//   (sum_n n^2 (n^{-sigma} - (n+1)^{-sigma})^2)^{1/2},  1/2 < sigma <= 1,
// with `terms` explicit terms; the rest is bracketed termwise between
// (2^sigma - 1)^2 (n+1)^{-2 sigma} and sigma^2 (n+1)^{-2 sigma}.
// Throws DomainError outside (1/2, 1].
Enclosure delta_norm_exact_p2(double sigma, std::uint64_t terms);

// sigma_p = p - 1 + (log(p-1) + log zeta(p)) / log 2, from the midpoint of a
// zeta(p) enclosure (accurate to about 1e-10 for p >= 1.5).
double sigma_threshold(const Exponent& e);

}  // namespace dcs
