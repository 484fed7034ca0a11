#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "dcs/coeff_seq.hpp"
#include "dcs/errors.hpp"
#include "dcs/norms.hpp"
#include "dcs/sampling.hpp"
#include "oracles.hpp"

using namespace dcs;

namespace {

std::vector<double> dense_magnitudes(const CoeffSeq& a) {
  std::vector<double> mag(a.max_index(), 0.0);
  for (const auto& [n, v] : a.entries()) mag[n - 1] = std::abs(v);
  return mag;
}

}  // namespace

TEST_CASE("coefficient sequence invariants") {
  const CoeffSeq a = CoeffSeq::from_entries({{3, 1.0}, {1, 2.0}, {2, 0.0}});
  REQUIRE(a.size() == 2);
  CHECK(a.entries()[0].index == 1);
  CHECK(a.entries()[1].index == 3);
  CHECK(a.at(2) == Complex(0.0));
  CHECK(a.max_index() == 3);
  CHECK(a.min_index() == 1);
  CHECK_THROWS_AS(CoeffSeq::from_entries({{1, 1.0}, {1, 2.0}}), InputError);
  CHECK_THROWS_AS(CoeffSeq::from_entries({{0, 1.0}}), InputError);
  CHECK_THROWS_AS(CoeffSeq::from_sorted({{2, 1.0}, {1, 1.0}}), InputError);
  CHECK(CoeffSeq::ones(3).size() == 3);
  CHECK(CoeffSeq::monomial(5, 2.0).at(5) == Complex(2.0));
  CHECK(CoeffSeq().max_index() == 0);
}

TEST_CASE("ces norm examples") {
  const Enclosure one = ces_norm(CoeffSeq::monomial(1), Exponent(2.0));
  CHECK(one.contains(std::sqrt(oracle::kZeta2)));
  CHECK(one.width() < 1e-7);
  CHECK(ces_norm(CoeffSeq(), Exponent(2.0)) == Enclosure(0.0, 0.0));

  const Enclosure spike = ces_norm(CoeffSeq::monomial(2, std::sqrt(2.0)), Exponent(2.0));
  CHECK(spike.contains(std::sqrt(2.0 * (oracle::kZeta2 - 1.0))));
  CHECK(spike.hi <= std::sqrt(2.0));
}

TEST_CASE("ces norm matches the dense oracle") {
  Rng rng(7);
  for (int i = 0; i < 60; ++i) {
    const CoeffSeq a = random_coeffs(rng, {10, 200, true, false});
    for (double p : {1.25, 1.5, 2.0, 3.0, 6.0}) {
      const Enclosure e = ces_norm(a, Exponent(p));
      const double ref = oracle::ces_norm(dense_magnitudes(a), p);
      CHECK(e.contains(ref, 1e-12 * ref));
      // The bare tail bracket after 10^4 explicit terms is about (10^4)^{-p} wide.
      CHECK(e.width() <= 1e-4 * ref);
    }
  }
}

TEST_CASE("ces norm is homogeneous and monotone") {
  Rng rng(11);
  for (int i = 0; i < 40; ++i) {
    const CoeffSeq a = random_coeffs(rng, {8, 64, true, false});
    const Exponent e(1.7);
    const Enclosure base = ces_norm(a, e);
    const Complex lambda(-2.5, 1.5);
    const Enclosure scaled = ces_norm(a.scaled(lambda), e);
    CHECK(scaled.lo <= std::abs(lambda) * base.hi * (1 + 1e-12));
    CHECK(scaled.hi >= std::abs(lambda) * base.lo * (1 - 1e-12));

    // Adding mass anywhere can only increase the norm.
    std::vector<CoeffEntry> bigger(a.entries().begin(), a.entries().end());
    for (auto& entry : bigger) entry.value *= 1.5;
    bigger.push_back({a.max_index() + 3, 0.25});
    CHECK(ces_norm(CoeffSeq::from_entries(bigger), e).lo >= base.hi * (1 - 1e-12));
  }
}

TEST_CASE("lp, majorant, dq and ar norms") {
  CHECK(lp_norm(CoeffSeq::from_entries({{1, 3.0}, {2, 4.0}}), 2.0) == doctest::Approx(5.0));
  CHECK(lp_norm(CoeffSeq(), 2.0) == 0.0);
  CHECK(lp_norm(CoeffSeq::ones(3), 1.0) == doctest::Approx(3.0));

  CHECK(least_decreasing_majorant(CoeffSeq::from_entries({{1, 1.0}, {2, 0.5}}), 3) ==
        std::vector<double>{1.0, 0.5, 0.0});
  CHECK(least_decreasing_majorant(CoeffSeq::from_entries({{1, 0.5}, {2, 1.0}}), 2) ==
        std::vector<double>{1.0, 1.0});
  CHECK(least_decreasing_majorant(CoeffSeq(), 2) == std::vector<double>{0.0, 0.0});
  CHECK_THROWS_AS(least_decreasing_majorant(CoeffSeq::monomial(5), 4), DomainError);

  const Exponent e2(2.0);
  CHECK(dq_norm(CoeffSeq::from_entries({{1, 1.0}, {2, 0.5}}), e2) == doctest::Approx(std::sqrt(1.25)));
  CHECK(dq_norm(CoeffSeq::from_entries({{1, 0.5}, {2, 1.0}}), e2) == doctest::Approx(std::sqrt(2.0)));
  CHECK(dq_norm(CoeffSeq(), e2) == 0.0);

  CHECK(ar_norm(CoeffSeq::monomial(1), 0.7) == 1.0);
  CHECK(ar_norm(CoeffSeq::monomial(5), 0.3) == doctest::Approx(std::pow(5.0, -0.3)));
  CHECK(ar_norm(CoeffSeq::ones(3), 0.5) == doctest::Approx(2.284457050376173).epsilon(1e-14));
}

TEST_CASE("dq norm matches a dense majorant") {
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    const CoeffSeq b = random_coeffs(rng, {12, 300, true, false});
    const Exponent e(2.5);
    const auto mag = dense_magnitudes(b);
    double ref = 0.0;
    for (std::size_t n = 0; n < mag.size(); ++n)
      ref += std::pow(*std::max_element(mag.begin() + n, mag.end()), e.q());
    ref = std::pow(ref, 1.0 / e.q());
    CHECK(dq_norm(b, e) == doctest::Approx(ref).epsilon(1e-12));
  }
}

TEST_CASE("hardy ratio") {
  const Exponent e(2.0);
  CHECK(hardy_ratio(CoeffSeq::monomial(1), e) == doctest::Approx(std::sqrt(oracle::kZeta2)).epsilon(1e-7));
  CHECK(hardy_ratio(CoeffSeq::ones(100), e) <= 2.0);
  const double spike = hardy_ratio(CoeffSeq::monomial(1'000'000), e);
  CHECK(spike <= 2.0);
  CHECK(spike == doctest::Approx(std::sqrt(static_cast<double>(oracle::tail_sum(2.0, 999'999, 1'000'100))))
                     .epsilon(1e-9));
  CHECK_THROWS_AS(hardy_ratio(CoeffSeq(), e), DomainError);
}

TEST_CASE("M and N functionals") {
  const MNValues one = m_n_functionals_p2(CoeffSeq::monomial(1));
  CHECK(one.M == doctest::Approx(1.0));
  CHECK(one.N == doctest::Approx(1.0));
  const MNValues zero = m_n_functionals_p2(CoeffSeq());
  CHECK(zero.M == 0.0);
  CHECK(zero.N == 0.0);
  CHECK_THROWS_AS(m_n_functionals_p2(CoeffSeq::ones(kMaxMNSupport + 1)), ResourceError);

  // Brute force over a small dense sequence.
  const std::vector<double> v{0.3, -1.2, 0.0, 2.0, 0.7};
  double M2 = 0.0, N2 = 0.0, A = 0.0;
  for (std::size_t i = 1; i <= v.size(); ++i) {
    A += std::abs(v[i - 1]);
    N2 += std::abs(v[i - 1]) / i * A;
    for (std::size_t j = 1; j <= v.size(); ++j)
      M2 += std::abs(v[i - 1]) * std::abs(v[j - 1]) / std::max(i, j);
  }
  const MNValues mn = m_n_functionals_p2(CoeffSeq::dense(v));
  CHECK(mn.M == doctest::Approx(std::sqrt(M2)).epsilon(1e-13));
  CHECK(mn.N == doctest::Approx(std::sqrt(N2)).epsilon(1e-13));
}

TEST_CASE("exponent validation") {
  CHECK(Exponent(2.0).q() == 2.0);
  CHECK(Exponent(3.0).q() == doctest::Approx(1.5));
  CHECK_THROWS_AS(Exponent(1.0), DomainError);
  CHECK_THROWS_AS(Exponent(0.5), DomainError);
  CHECK_THROWS_AS(Exponent{std::numeric_limits<double>::infinity()}, DomainError);
}
