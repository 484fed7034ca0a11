#pragma once

#include <cstddef>
#include <iosfwd>

namespace dcs {

// Real interval [lo, hi] known to contain the exact value of an infinite sum.
//
// Enclosures are "engineering-certified": mathematical brackets are exact,
// floating-point rounding is absorbed by widening endpoints a fixed number of
// ulps per accumulated term (see widen_for_terms). This is not verified
// interval arithmetic with directed rounding.
struct Enclosure {
  double lo = 0.0;
  double hi = 0.0;

  constexpr Enclosure() = default;
  // Throws DomainError unless lo <= hi and both are finite.
  Enclosure(double lo, double hi);

  static Enclosure point(double v) { return Enclosure(v, v); }

  double width() const noexcept { return hi - lo; }
  double mid() const noexcept { return 0.5 * (lo + hi); }
  bool contains(double v, double slack = 0.0) const noexcept {
    return lo - slack <= v && v <= hi + slack;
  }
  bool inside(const Enclosure& outer, double slack = 0.0) const noexcept {
    return outer.lo - slack <= lo && hi <= outer.hi + slack;
  }

  friend bool operator==(const Enclosure&, const Enclosure&) = default;
};

Enclosure operator+(const Enclosure& a, const Enclosure& b);
Enclosure operator+(const Enclosure& a, double b);
// Multiplication by a nonnegative scalar.
Enclosure operator*(double k, const Enclosure& a);

// x -> x^e applied endpointwise; requires lo >= 0. Decreasing for e < 0, so
// the endpoints swap.
Enclosure pow(const Enclosure& a, double e);
Enclosure sqrt(const Enclosure& a);

// Number of ulps each endpoint is widened per accumulated floating-point term.
inline constexpr int kUlpsPerTerm = 4;

// Widens both endpoints outward by kUlpsPerTerm ulps (relative to the
// endpoint magnitude) for each of `terms` accumulated terms.
Enclosure widen_for_terms(const Enclosure& a, std::size_t terms);
// Same for sums accumulated in long double: kUlpsPerTerm long double ulps per
// term plus two double ulps for the final rounding.
Enclosure widen_for_extended_terms(const Enclosure& a, std::size_t terms);
double widen_down(double v, std::size_t terms);
double widen_up(double v, std::size_t terms);

std::ostream& operator<<(std::ostream& os, const Enclosure& e);

}  // namespace dcs
