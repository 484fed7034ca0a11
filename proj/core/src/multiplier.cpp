#include "dcs/multiplier.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "dcs/errors.hpp"
#include "dcs/norms.hpp"
#include "dcs/parallel.hpp"
#include "dcs/special.hpp"

namespace dcs {

MonomialCheck monomial_multiplier_check(std::uint64_t m, const Exponent& e, std::size_t samples,
                                        std::uint64_t j_probe, std::uint64_t seed) {
  if (m == 0) throw DomainError("monomial index must be >= 1");
  MonomialCheck out;
  if (m == 1) {
    out.lower_est = 1.0;
    out.worst_ratio = 1.0;
    return out;
  }
  if (j_probe < 2) throw DomainError("probe index j must be >= 2");
  const double bound = std::pow(static_cast<double>(m), -1.0 / e.q());
  const DirichletPoly mono(CoeffSeq::monomial(m));

  const auto ratios = parallel_map(samples, [&](std::size_t i) {
    Rng rng(task_seed(seed, i));
    const DirichletPoly g(random_coeffs(rng, {.max_support = 12, .max_index = 64}));
    const DirichletPoly mg = convolve(mono, g, full_product_limit(mono, g));
    const double lhs = ces_norm(mg.coeffs(), e).lo;
    const double rhs = bound * ces_norm(g.coeffs(), e).hi;
    return std::pair{lhs / rhs, lhs <= rhs + kMonomialSlack};
  });
  for (const auto& [ratio, ok] : ratios) {
    out.worst_ratio = std::max(out.worst_ratio, ratio);
    if (!ok) ++out.violations;
  }
  out.upper_ok = out.violations == 0;

  const Enclosure num = ces_norm(CoeffSeq::monomial(m * j_probe), e);
  const Enclosure den = ces_norm(CoeffSeq::monomial(j_probe), e);
  out.lower_est = num.lo / den.hi;
  return out;
}

std::uint64_t find_rm(std::uint64_t m, const PrimeTable& table) {
  if (m < 2) throw DomainError("find_rm needs m >= 2");
  const std::size_t count = table.count();
  const double md = static_cast<double>(m);
  auto in_window = [&](std::size_t r) {
    const double pr = static_cast<double>(table.nth(r));
    const double rl = static_cast<double>(r) * std::log(static_cast<double>(r));
    return md * pr / (md + 1.0) <= rl && rl <= md * pr / (md - 1.0);
  };
  std::size_t r = count;
  while (r >= 1 && in_window(r)) --r;
  // r is now the last index that fails (0 if none does).
  const std::uint64_t r_m = std::max<std::uint64_t>(r + 1, m + 1);
  if (r_m > count) {
    throw SearchFailure("no PNT window for m = " + std::to_string(m) + " within primes <= " +
                        std::to_string(table.limit()) + " (the window fails at r = " +
                        std::to_string(r) + ", p_r = " + std::to_string(table.nth(std::max<std::size_t>(r, 1))) +
                        ")");
  }
  return r_m;
}

namespace {
void check_alpha(double alpha, const Exponent& e) {
  const double q = e.q();
  if (!(alpha > 0.5 / q && alpha < 1.0 / q)) {
    throw DomainError("alpha = " + std::to_string(alpha) + " outside (1/(2q), 1/q) = (" +
                      std::to_string(0.5 / q) + ", " + std::to_string(1.0 / q) + ")");
  }
}
}  // namespace

DirichletPoly build_test_function(std::uint64_t m, double alpha, const Exponent& e,
                                  const PrimeTable& table, std::uint64_t r_m) {
  check_alpha(alpha, e);
  if (r_m < 2 || r_m > table.count()) throw DomainError("r_m outside the prime table");
  const double onset = decrease_onset(1.0 / e.q());
  if (static_cast<double>(r_m) < onset) {
    throw DomainError("r_m = " + std::to_string(r_m) + " lies before the decrease onset x_q = " +
                      std::to_string(onset));
  }
  (void)m;
  std::vector<CoeffEntry> entries;
  entries.reserve(table.count() - r_m + 1);
  for (std::size_t r = r_m; r <= table.count(); ++r) {
    entries.push_back({table.nth(r), phi_alpha_deriv(static_cast<double>(r), alpha)});
  }
  return DirichletPoly(CoeffSeq::from_sorted(std::move(entries)));
}

DirichletPoly build_test_function(std::uint64_t m, double alpha, const Exponent& e,
                                  const PrimeTable& table) {
  check_alpha(alpha, e);
  return build_test_function(m, alpha, e, table, find_rm(m, table));
}

double test_function_norm_bound(std::uint64_t m, double alpha, const Exponent& e,
                                std::uint64_t p_rm) {
  const double p = e.p();
  const double md = static_cast<double>(m);
  const double expo = p * (1.0 - alpha) - 1.0;
  return std::pow(md / (md - 1.0), alpha * p) /
         (expo * std::pow(static_cast<double>(p_rm) - 1.0, expo));
}

double product_norm_lower_bound(const DirichletPoly& f, std::uint64_t m, double alpha,
                                const Exponent& e, std::uint64_t r_m, const PrimeTable& table) {
  const double p = e.p();
  const double q = e.q();
  const double p_rm = static_cast<double>(table.nth(r_m));
  // Sum over omega in supp f built from p_1..p_{r_m - 1} with exponents <= m.
  long double s = 0.0L;
  for (const auto& x : f.coeffs().entries()) {
    std::uint64_t n = x.index;
    bool ok = true;
    for (std::size_t i = 1; i < r_m && n > 1; ++i) {
      const std::uint64_t pi = table.nth(i);
      std::uint64_t t = 0;
      while (n % pi == 0) {
        n /= pi;
        ++t;
      }
      if (t > m) ok = false;
    }
    if (ok && n == 1) s += std::abs(x.value) * std::pow(static_cast<double>(x.index), -alpha);
  }
  if (s <= 0.0L) return 0.0;
  const double md = static_cast<double>(m);
  const double expo = p * (1.0 - alpha) - 1.0;
  const double log_nm = std::log(3.0) + (md * static_cast<double>(r_m) + 1.0 + 2.0 * q) * std::log(p_rm);
  const double log_bound = p * std::log1p(-1.0 / p_rm) + alpha * p * std::log(md / (md + 1.0)) -
                           std::log(expo) - expo * log_nm + p * std::log(static_cast<double>(s));
  return std::exp(log_bound);
}

MultiplierEstimate multiplier_lower_estimate(const DirichletPoly& f, std::uint64_t m, double alpha,
                                             const Exponent& e, const PrimeTable& table,
                                             std::uint64_t conv_limit) {
  if (f.is_zero()) throw DomainError("multiplier estimate needs a nonzero f");
  check_alpha(alpha, e);
  const std::uint64_t r_m = find_rm(m, table);
  const std::uint64_t p_rm = table.nth(r_m);
  if (conv_limit / p_rm < f.coeffs().max_index()) {
    throw DomainError("conv_limit " + std::to_string(conv_limit) + " is below p_{r_m} * max supp f = " +
                      std::to_string(p_rm) + " * " + std::to_string(f.coeffs().max_index()));
  }
  const DirichletPoly g = build_test_function(m, alpha, e, table, r_m);
  const DirichletPoly fg = convolve(f, g, conv_limit);

  MultiplierEstimate out;
  out.m = m;
  out.alpha = alpha;
  out.r_m = r_m;
  out.prime_limit = table.limit();
  out.conv_limit = conv_limit;
  out.g_norm = ces_norm(truncate(g, conv_limit).coeffs(), e);
  out.fg_norm = ces_norm(fg.coeffs(), e);
  out.ratio = out.fg_norm.lo / out.g_norm.hi;
  out.reference = ar_norm(f.coeffs(), 1.0 / e.q());
  out.heuristic_window = true;
  return out;
}

std::uint64_t phi_level_index(double C) {
  if (!(C > 0.0) || !std::isfinite(C)) throw DomainError("phi level needs C > 0");
  const double x = C / lambert_w(C);
  auto k = static_cast<std::uint64_t>(std::floor(x));
  while (phi(static_cast<double>(k + 1)) <= C) ++k;
  while (k > 1 && phi(static_cast<double>(k)) > C) --k;
  return k;
}

bool lemma_j_check(std::uint64_t r0, double C1, double C2, double alpha, double beta,
                   std::span<const std::uint64_t> J) {
  if (!(alpha > 0.0 && alpha <= beta && beta < 1.0)) {
    throw DomainError("lemma_j_check needs 0 < alpha <= beta < 1");
  }
  if (r0 < 2) throw DomainError("lemma_j_check needs r0 >= 2");
  const double phi_r0 = phi(static_cast<double>(r0));
  if (!(C1 >= C2 && C2 >= phi_r0)) throw DomainError("lemma_j_check needs C1 >= C2 >= phi(r0)");
  const double onset = decrease_onset(beta);
  if (static_cast<double>(r0) < onset) {
    throw DomainError("r0 = " + std::to_string(r0) + " lies before x_beta = " + std::to_string(onset));
  }

  std::vector<std::uint64_t> js(J.begin(), J.end());
  std::sort(js.begin(), js.end());
  js.erase(std::unique(js.begin(), js.end()), js.end());
  const std::uint64_t k1 = phi_level_index(C1);
  const std::uint64_t k2 = phi_level_index(C2);
  if (!js.empty() && (js.front() < r0 || js.back() > k1)) {
    throw DomainError("J is not contained in {r >= r0 : phi(r) <= C1}");
  }
  const std::size_t must = k2 >= r0 ? static_cast<std::size_t>(k2 - r0 + 1) : 0;
  const auto covered = std::upper_bound(js.begin(), js.end(), k2) - js.begin();
  if (static_cast<std::size_t>(covered) != must) {
    throw DomainError("J does not contain {r >= r0 : phi(r) <= C2}");
  }

  long double sum = 0.0L;
  for (const auto r : js) sum += phi_alpha_deriv(static_cast<double>(r), alpha);
  const double lower = std::pow(C2, alpha) - std::pow(phi_r0, alpha);
  const double upper = std::pow(C1, alpha) - std::pow(phi(static_cast<double>(r0 - 1)), alpha);
  const double slack = 1e-12 * std::max(1.0, std::abs(upper));
  const double s = static_cast<double>(sum);
  return lower - slack <= s && s <= upper + slack;
}

NoncompactnessResult noncompactness_measure(const DirichletPoly& f, std::uint64_t m,
                                            const Exponent& e) {
  if (f.is_zero()) throw DomainError("noncompactness_bound needs a nonzero f");
  if (m == 0) throw DomainError("noncompactness_bound needs m >= 1");
  const DirichletPoly mono(CoeffSeq::monomial(m));
  const DirichletPoly mf = convolve(mono, f, full_product_limit(mono, f));
  NoncompactnessResult out;
  out.lhs = std::pow(static_cast<double>(m), 1.0 / e.q()) * ces_norm(mf.coeffs(), e).hi;
  out.rhs = 0.5 * ces_norm(f.coeffs(), e).lo;
  out.holds = out.lhs >= out.rhs - kNoncompactSlack;
  return out;
}

bool noncompactness_bound(const DirichletPoly& f, std::uint64_t m, const Exponent& e) {
  return noncompactness_measure(f, m, e).holds;
}

}  // namespace dcs
