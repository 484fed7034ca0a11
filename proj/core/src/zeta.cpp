#include "dcs/zeta.hpp"

#include <cmath>
#include <string>

#include "dcs/errors.hpp"

namespace dcs {

namespace {
void check_convergent(double x) {
  if (!(x > 1.0) || !std::isfinite(x)) {
    throw DomainError("zeta sum diverges for x = " + std::to_string(x) + " (need x > 1)");
  }
}
}  // namespace

long double power_sum(double x, std::uint64_t a, std::uint64_t b) {
  if (a == 0) throw DomainError("power_sum index starts at 1");
  long double s = 0.0L;
  const long double e = -static_cast<long double>(x);
  for (std::uint64_t n = b; n >= a && n > 0; --n) {
    s += std::pow(static_cast<long double>(n), e);
    if (n == a) break;
  }
  return s;
}

Enclosure zeta_tail(double x, std::uint64_t N, std::uint64_t prefix) {
  check_convergent(x);
  if (N == 0) throw DomainError("zeta_tail needs N >= 1");
  const long double explicit_part = prefix > 0 ? power_sum(x, N + 1, N + prefix) : 0.0L;
  const long double M = static_cast<long double>(N + prefix);
  const long double xm1 = static_cast<long double>(x) - 1.0L;
  const long double lo = explicit_part + std::pow(M + 1.0L, -xm1) / xm1;
  const long double hi = explicit_part + std::pow(M, -xm1) / xm1;
  return widen_for_extended_terms(Enclosure(static_cast<double>(lo), static_cast<double>(hi)),
                                  prefix + 2);
}

Enclosure zeta_real(double x, std::uint64_t terms) {
  check_convergent(x);
  if (terms == 0) throw DomainError("zeta_real needs at least one explicit term");
  const long double head = power_sum(x, 1, terms);
  const Enclosure tail = zeta_tail(x, terms, 0);
  const Enclosure sum(static_cast<double>(head + tail.lo), static_cast<double>(head + tail.hi));
  return widen_for_extended_terms(sum, terms + 2);
}

Enclosure zeta_tail_from(double x, std::uint64_t k, std::uint64_t prefix) {
  check_convergent(x);
  if (k == 0) throw DomainError("B_k needs k >= 1");
  return zeta_tail(x, k, prefix) + std::pow(static_cast<double>(k), -x);
}

}  // namespace dcs
