#include "dcs/enclosure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

#include "dcs/errors.hpp"

namespace dcs {

Enclosure::Enclosure(double lo_, double hi_) : lo(lo_), hi(hi_) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "invalid enclosure [" << lo << ", " << hi << "]";
    throw DomainError(msg.str());
  }
}

Enclosure operator+(const Enclosure& a, const Enclosure& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

Enclosure operator+(const Enclosure& a, double b) { return {a.lo + b, a.hi + b}; }

Enclosure operator*(double k, const Enclosure& a) {
  if (!(k >= 0.0)) throw DomainError("enclosure scaling needs k >= 0");
  return {k * a.lo, k * a.hi};
}

Enclosure pow(const Enclosure& a, double e) {
  if (a.lo < 0.0) throw DomainError("pow of an enclosure with negative lower end");
  const double x = std::pow(a.lo, e);
  const double y = std::pow(a.hi, e);
  return {std::min(x, y), std::max(x, y)};
}

Enclosure sqrt(const Enclosure& a) {
  if (a.lo < 0.0) throw DomainError("sqrt of an enclosure with negative lower end");
  return {std::sqrt(a.lo), std::sqrt(a.hi)};
}

namespace {
double slack_factor(std::size_t terms) {
  return static_cast<double>(kUlpsPerTerm) * static_cast<double>(terms + 1) *
         std::numeric_limits<double>::epsilon();
}
}  // namespace

double widen_down(double v, std::size_t terms) {
  return v - slack_factor(terms) * std::abs(v);
}

double widen_up(double v, std::size_t terms) {
  return v + slack_factor(terms) * std::abs(v);
}

Enclosure widen_for_terms(const Enclosure& a, std::size_t terms) {
  return {widen_down(a.lo, terms), widen_up(a.hi, terms)};
}

Enclosure widen_for_extended_terms(const Enclosure& a, std::size_t terms) {
  const double k = static_cast<double>(kUlpsPerTerm) * static_cast<double>(terms + 1) *
                       static_cast<double>(std::numeric_limits<long double>::epsilon()) +
                   2.0 * std::numeric_limits<double>::epsilon();
  return {a.lo - k * std::abs(a.lo), a.hi + k * std::abs(a.hi)};
}

std::ostream& operator<<(std::ostream& os, const Enclosure& e) {
  const auto old = os.precision(17);
  os << '[' << e.lo << ", " << e.hi << ']';
  os.precision(old);
  return os;
}

}  // namespace dcs
