#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dcs/errors.hpp"
#include "dcs/multiplier.hpp"
#include "dcs/norms.hpp"
#include "dcs/schur.hpp"
#include "dcs/special.hpp"
#include "oracles.hpp"

using namespace dcs;

namespace {

const PrimeTable& table_1e6() {
  static const PrimeTable t = sieve_primes(1'000'000);
  return t;
}

// Backward scan for the last index where the window fails.
std::uint64_t window_start(std::uint64_t m, const std::vector<std::uint32_t>& primes) {
  std::uint64_t start = m + 1;
  for (std::uint64_t r = primes.size(); r > m; --r) {
    const double p = primes[r - 1];
    const double rl = r * std::log(double(r));
    if (!(m * p / (m + 1.0) <= rl && rl <= m * p / (m - 1.0))) {
      start = r + 1;
      break;
    }
  }
  return start;
}

std::vector<std::uint64_t> level_set(std::uint64_t r0, double C) {
  std::vector<std::uint64_t> J;
  for (std::uint64_t r = r0; phi(double(r)) <= C; ++r) J.push_back(r);
  return J;
}

}  // namespace

TEST_CASE("monomial multipliers") {
  const MonomialCheck two = monomial_multiplier_check(2, Exponent(2.0), 20, 10'000);
  CHECK(two.lower_est >= std::sqrt(9999.0 / 20000.0) * (1 - 1e-12));
  CHECK(two.lower_est <= std::sqrt(0.5) * (1 + 1e-9));
  CHECK(two.upper_ok);

  const MonomialCheck one = monomial_multiplier_check(1, Exponent(1.5), 10, 100);
  CHECK(one.lower_est == 1.0);

  const MonomialCheck four = monomial_multiplier_check(4, Exponent(2.0), 100, 1000);
  CHECK(four.upper_ok);
  CHECK(four.violations == 0);
  CHECK(four.worst_ratio <= 1.0 + 1e-10);
}

TEST_CASE("prime window index") {
  const auto primes = oracle::primes_upto(1'000'000);
  for (std::uint64_t m : {2u, 3u, 4u, 5u}) CHECK(find_rm(m, table_1e6()) == window_start(m, primes));
  CHECK(find_rm(2, table_1e6()) < find_rm(5, table_1e6()));
  CHECK_THROWS_AS(find_rm(10, table_1e6()), SearchFailure);
}

TEST_CASE("test function construction") {
  const Exponent e(2.0);
  const DirichletPoly g = build_test_function(3, 0.4, e, table_1e6());
  const std::uint64_t rm = find_rm(3, table_1e6());
  REQUIRE_FALSE(g.is_zero());
  CHECK(g.coeffs().min_index() == table_1e6().nth(rm));
  CHECK(g.coeffs().size() == table_1e6().count() - rm + 1);
  CHECK(g.coeffs().at(table_1e6().nth(rm)).real() ==
        doctest::Approx(phi_alpha_deriv(double(rm), 0.4)));
  CHECK_THROWS_AS(build_test_function(3, 0.25, e, table_1e6()), DomainError);
  CHECK_THROWS_AS(build_test_function(3, 0.5, e, table_1e6()), DomainError);

  const Enclosure gn = ces_norm(g.coeffs(), e);
  CHECK(gn.hi * gn.hi <= test_function_norm_bound(3, 0.4, e, table_1e6().nth(rm)));
}

TEST_CASE("multiplier lower estimates") {
  const Exponent e(2.0);
  const PrimeTable& t = table_1e6();

  const DirichletPoly one(CoeffSeq::monomial(1));
  const MultiplierEstimate id = multiplier_lower_estimate(one, 3, 0.45, e, t, t.limit());
  CHECK(id.reference == 1.0);
  CHECK(id.ratio <= 1.0 + 1e-9);
  CHECK(id.ratio >= 1.0 - 1e-6);
  CHECK(id.heuristic_window);

  const DirichletPoly two(CoeffSeq::monomial(2));
  const MultiplierEstimate mono = multiplier_lower_estimate(two, 3, 0.45, e, t, 2 * t.limit());
  CHECK(mono.reference == doctest::Approx(std::sqrt(0.5)));
  CHECK(mono.ratio <= mono.reference + 1e-9);

  const DirichletPoly f(CoeffSeq::ones(3));
  const double ref = ar_norm(f.coeffs(), 0.5);
  double prev = 0.0;
  for (double alpha : {0.3, 0.4, 0.45, 0.49}) {
    const MultiplierEstimate est = multiplier_lower_estimate(f, 2, alpha, e, t, 3 * t.limit());
    CHECK(est.reference == doctest::Approx(ref));
    CHECK(est.ratio > 0.0);
    CHECK(est.ratio <= ref + 1e-9);
    CHECK(est.ratio >= prev - 1e-3);
    prev = est.ratio;
  }
  // The first product index p_{r_m} * 3 must fit under the limit.
  CHECK_THROWS_AS(multiplier_lower_estimate(f, 2, 0.45, e, t, 10), DomainError);
  CHECK_THROWS_AS(multiplier_lower_estimate(DirichletPoly(), 2, 0.45, e, t, t.limit()), DomainError);
}

TEST_CASE("lemma J sandwich") {
  for (std::uint64_t r0 : {100u, 1000u}) {
    for (double k : {2.0, 10.0}) {
      for (double alpha : {0.3, 0.5}) {
        const double C = k * phi(double(r0));
        const auto J = level_set(r0, C);
        CHECK(J.back() == phi_level_index(C));
        CHECK(lemma_j_check(r0, C, C, alpha, 0.5, J));
      }
    }
  }

  // C = phi(r0) still admits r0 itself, so an empty J breaks the inclusion.
  const double C0 = phi(100.0);
  CHECK_THROWS_AS(lemma_j_check(100, C0, C0, 0.4, 0.5, {}), DomainError);
  const std::vector<std::uint64_t> just_r0{100};
  CHECK(lemma_j_check(100, C0, C0, 0.4, 0.5, just_r0));

  // J strictly between the two level sets.
  const double C2 = 2 * phi(100.0), C1 = 3 * phi(100.0);
  auto J = level_set(100, 2.5 * phi(100.0));
  CHECK(lemma_j_check(100, C1, C2, 0.4, 0.5, J));
  J.pop_back();
  J.erase(J.begin());
  CHECK_THROWS_AS(lemma_j_check(100, C1, C2, 0.4, 0.5, J), DomainError);
  CHECK_THROWS_AS(lemma_j_check(100, C1, C2, 0.6, 0.5, level_set(100, C2)), DomainError);
}

TEST_CASE("phi level index") {
  for (double C : {10.0, 1000.0, 12345.6, 1e9}) {
    const std::uint64_t x = phi_level_index(C);
    CHECK(phi(double(x)) <= C);
    CHECK(phi(double(x + 1)) > C);
    CHECK(double(x) == doctest::Approx(std::floor(C / oracle::lambert_w(C))).epsilon(1e-9));
  }
}

TEST_CASE("noncompactness inequality") {
  const DirichletPoly one(CoeffSeq::monomial(1));
  const NoncompactnessResult r = noncompactness_measure(one, 4, Exponent(2.0));
  CHECK(r.lhs == doctest::Approx(2.0 * std::sqrt(oracle::kZeta2 - 1.0 - 0.25 - 1.0 / 9)).epsilon(1e-8));
  CHECK(r.rhs == doctest::Approx(0.5 * std::sqrt(oracle::kZeta2)).epsilon(1e-8));
  CHECK(r.holds);
  CHECK(noncompactness_bound(one, 1, Exponent(1.5)));

  Rng rng(43);
  for (int i = 0; i < 50; ++i) {
    const DirichletPoly f(random_coeffs(rng, {8, 64, true, false}));
    for (std::uint64_t m : {2u, 8u, 64u})
      for (double p : {1.5, 2.0}) CHECK(noncompactness_bound(f, m, Exponent(p)));
  }
}

TEST_CASE("schur test") {
  const Exponent e(2.0);
  const CoeffSeq b = CoeffSeq::from_entries({{1, 1.0}, {3, 0.5}, {4, Complex(0, 2.0)}});
  const SchurResult fin = schur_test(SequenceSpec::finite(b), e, 10);
  CHECK(fin.verdict == SchurVerdict::schur);
  // sup_{k>=n} |b_k|^2/k: n = 1..4 -> 1, 1, 1, 1
  CHECK(fin.value.contains(4.0, 1e-12));

  const SchurResult conv = schur_test(SequenceSpec::log_power(1.0), e, 100'000);
  CHECK(conv.verdict == SchurVerdict::schur);
  CHECK(std::isfinite(conv.value.hi));
  const SchurResult longer = schur_test(SequenceSpec::log_power(1.0), e, 1'000'000);
  CHECK(longer.value.inside(conv.value, 1e-12));

  CHECK(schur_test(SequenceSpec::log_power(0.4), e, 100'000).verdict == SchurVerdict::not_schur);
  CHECK(schur_test(SequenceSpec::power(0.1), e, 1000).verdict == SchurVerdict::schur);
  CHECK(schur_test(SequenceSpec::power(0.0), e, 1000).verdict == SchurVerdict::not_schur);
  CHECK(schur_test(SequenceSpec::log_power(0.5), e, 1000).verdict == SchurVerdict::not_schur);
  CHECK_THROWS_AS(SequenceSpec::log_power(0.0), DomainError);
  CHECK(std::string(to_string(SchurVerdict::inconclusive)) == "inconclusive");
}
