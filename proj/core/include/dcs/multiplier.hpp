#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "dcs/dirichlet.hpp"
#include "dcs/enclosure.hpp"
#include "dcs/exponent.hpp"
#include "dcs/primes.hpp"
#include "dcs/sampling.hpp"

namespace dcs {

struct MonomialCheck {
  bool upper_ok = true;
  double lower_est = 0.0;
  std::size_t violations = 0;
  // max over samples of ||m^{-s} g||.lo / (m^{-1/q} ||g||.hi)
  double worst_ratio = 0.0;
};

inline constexpr double kMonomialSlack = 1e-10;

// Multiplier norm of m^{-s} is m^{-1/q}. Upper side: `samples` random g must
// satisfy ||m^{-s} g|| <= m^{-1/q} ||g|| + slack. Lower side: the probe
// g = j^{-s} gives ||(mj)^{-s}|| / ||j^{-s}|| >= ((j-1)/(jm))^{1/q}.
// m = 1 returns lower_est = 1 exactly.
MonomialCheck monomial_multiplier_check(std::uint64_t m, const Exponent& e, std::size_t samples,
                                        std::uint64_t j_probe, std::uint64_t seed = kDefaultSeed);

// Smallest r_m > m such that m p_r/(m+1) <= r log r <= m p_r/(m-1) for every
// r in [r_m, pi(limit)]. Certified only over the table; throws SearchFailure
// when the window does not hold at the end of the table.
std::uint64_t find_rm(std::uint64_t m, const PrimeTable& table);

// b_n = (phi^alpha)'(r) at n = p_r for r >= r_m (and p_r <= table.limit()),
// zero elsewhere. Requires 1/(2q) < alpha < 1/q and r_m past the monotone
// decrease onset of (phi^alpha)'.
DirichletPoly build_test_function(std::uint64_t m, double alpha, const Exponent& e,
                                  const PrimeTable& table);
DirichletPoly build_test_function(std::uint64_t m, double alpha, const Exponent& e,
                                  const PrimeTable& table, std::uint64_t r_m);

// Upper bound on ||g^{m,alpha}||^p:
//   (m/(m-1))^{alpha p} / ((p(1-alpha) - 1) (p_{r_m} - 1)^{p(1-alpha) - 1}).
double test_function_norm_bound(std::uint64_t m, double alpha, const Exponent& e,
                                std::uint64_t p_rm);

// Lower bound on ||f g^{m,alpha}||^p for the full series, with
// n_m = 3 p_{r_m}^{m r_m + 1 + 2q}; evaluated in log space (usually
// underflows to 0 at any feasible scale).
double product_norm_lower_bound(const DirichletPoly& f, std::uint64_t m, double alpha,
                                const Exponent& e, std::uint64_t r_m, const PrimeTable& table);

struct MultiplierEstimate {
  std::uint64_t m = 0;
  double alpha = 0.0;
  std::uint64_t r_m = 0;
  std::uint64_t prime_limit = 0;
  std::uint64_t conv_limit = 0;
  double ratio = 0.0;      // ||f g||.lo / ||g||.hi
  double reference = 0.0;  // ||f||_{A^{1/q}}
  Enclosure g_norm;
  Enclosure fg_norm;
  // r_m was certified on the sieve range only.
  bool heuristic_window = true;
};

// Lower estimate ||f g^{m,alpha}|| / ||g^{m,alpha}|| of the multiplier norm of
// f. Requires f nonzero and conv_limit >= p_{r_m} * max supp f.
MultiplierEstimate multiplier_lower_estimate(const DirichletPoly& f, std::uint64_t m, double alpha,
                                             const Exponent& e, const PrimeTable& table,
                                             std::uint64_t conv_limit);

// Sandwich C2^a - phi(r0)^a <= sum_{r in J} (phi^a)'(r) <= C1^a - phi(r0-1)^a
// for J between {r >= r0 : phi(r) <= C2} and {r >= r0 : phi(r) <= C1}.
// Throws DomainError if J violates those inclusions or a precondition fails.
bool lemma_j_check(std::uint64_t r0, double C1, double C2, double alpha, double beta,
                   std::span<const std::uint64_t> J);

// floor(C / W(C)): the largest real x with phi(x) <= C, rounded down and
// corrected against phi directly.
std::uint64_t phi_level_index(double C);

struct NoncompactnessResult {
  bool holds = true;
  double lhs = 0.0;  // m^{1/q} ||m^{-s} f||.hi
  double rhs = 0.0;  // ||f||.lo / 2
};

inline constexpr double kNoncompactSlack = 1e-10;

NoncompactnessResult noncompactness_measure(const DirichletPoly& f, std::uint64_t m,
                                            const Exponent& e);
// ||m^{1/q} m^{-s} f|| >= ||f|| / 2 - slack.
bool noncompactness_bound(const DirichletPoly& f, std::uint64_t m, const Exponent& e);

}  // namespace dcs
