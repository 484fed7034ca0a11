#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dcs/errors.hpp"
#include "dcs/parallel.hpp"
#include "dcs/primes.hpp"
#include "dcs/special.hpp"
#include "dcs/zeta.hpp"
#include "oracles.hpp"

using namespace dcs;

TEST_CASE("sieve small limits") {
  const PrimeTable t2 = sieve_primes(2);
  CHECK(std::vector<std::uint32_t>(t2.primes().begin(), t2.primes().end()) ==
        std::vector<std::uint32_t>{2});
  const PrimeTable t10 = sieve_primes(10);
  CHECK(std::vector<std::uint32_t>(t10.primes().begin(), t10.primes().end()) ==
        std::vector<std::uint32_t>{2, 3, 5, 7});
  const PrimeTable t100 = sieve_primes(100);
  CHECK(t100.count() == 25);
  CHECK(t100.nth(25) == 97);
  CHECK(t100.nth(1) == 2);
  CHECK_THROWS_AS(t100.nth(0), DomainError);
  CHECK_THROWS_AS(t100.nth(26), DomainError);
  CHECK(t100.pi(1) == 0);
  CHECK(t100.pi(2) == 1);
  CHECK(t100.pi(96) == 24);
  CHECK(t100.pi(1000) == 25);
}

TEST_CASE("sieve matches trial division") {
  for (std::uint64_t limit : {3u, 4u, 29u, 30u, 31u, 1000u, 65537u}) {
    const PrimeTable t = sieve_primes(limit);
    const auto ref = oracle::primes_upto(limit);
    CHECK(std::vector<std::uint32_t>(t.primes().begin(), t.primes().end()) == ref);
  }
}

TEST_CASE("segmented sieve agrees with the plain sieve") {
  for (std::uint64_t limit : {100u, 12345u, 1'000'003u}) {
    const PrimeTable plain = detail::sieve_plain(limit);
    for (std::size_t seg : {64u, 1000u, 1u << 16}) {
      const PrimeTable s = detail::sieve_segmented(limit, seg);
      CHECK(std::equal(plain.primes().begin(), plain.primes().end(), s.primes().begin(),
                       s.primes().end()));
    }
  }
}

TEST_CASE("sieve results are prefixes of larger sieves") {
  const PrimeTable big = sieve_primes(200'000);
  for (std::uint64_t limit : {2u, 50u, 9973u, 150'000u}) {
    const PrimeTable small = sieve_primes(limit);
    REQUIRE(small.count() <= big.count());
    CHECK(std::equal(small.primes().begin(), small.primes().end(), big.primes().begin()));
    CHECK(small.count() == big.pi(limit));
  }
}

TEST_CASE("sieve limit guards") {
  CHECK_THROWS_AS(sieve_primes(1), DomainError);
  CHECK_THROWS_AS(sieve_primes(0), DomainError);
  CHECK_THROWS_AS(sieve_primes(kMaxSieveLimit + 1), DomainError);
}

TEST_CASE("zeta enclosures") {
  const Enclosure z2 = zeta_real(2.0, 1'000'000);
  CHECK(z2.contains(oracle::kZeta2));
  CHECK(z2.width() < 1e-11);
  CHECK(zeta_real(2.0, 1000).contains(oracle::kZeta2));
  const Enclosure z15 = zeta_real(1.5, 1'000'000);
  CHECK(z15.contains(oracle::kZeta1_5));
  const Enclosure coarse = zeta_real(2.0, 1);
  CHECK(coarse.lo >= 1.0);
  CHECK(coarse.contains(oracle::kZeta2));
  CHECK_THROWS_AS(zeta_real(1.0, 10), DomainError);
  CHECK_THROWS_AS(zeta_real(0.5, 10), DomainError);
}

TEST_CASE("zeta tails") {
  const Enclosure t1 = zeta_tail(2.0, 1);
  CHECK(t1.contains(oracle::kZeta2 - 1.0));
  const Enclosure t10 = zeta_tail(2.0, 10);
  CHECK(t10.lo >= 1.0 / 11.0);
  CHECK(t10.hi <= 1.0 / 10.0);
  CHECK(t10.contains(static_cast<double>(oracle::tail_sum(2.0, 10))));

  for (double x : {1.1, 2.0, 3.7}) {
    for (std::uint64_t N : {1u, 7u, 1000u}) {
      const Enclosure bare = zeta_tail(x, N, 0);
      CHECK(bare.lo == doctest::Approx(std::pow(N + 1.0, 1.0 - x) / (x - 1.0)).epsilon(1e-14));
      CHECK(bare.hi == doctest::Approx(std::pow(double(N), 1.0 - x) / (x - 1.0)).epsilon(1e-14));
      const Enclosure tight = zeta_tail(x, N);
      CHECK(tight.inside(bare, 1e-15 * bare.hi));
      CHECK(tight.contains(static_cast<double>(oracle::tail_sum(x, N, N + 20000)), 1e-13));
    }
  }
  CHECK_THROWS_AS(zeta_tail(1.0, 5), DomainError);
  CHECK_THROWS_AS(zeta_tail(2.0, 0), DomainError);
}

TEST_CASE("zeta enclosures nest as terms grow") {
  for (double x : {1.5, 2.0, 4.0}) {
    Enclosure prev = zeta_real(x, 10);
    for (std::uint64_t terms : {100u, 1000u, 100'000u}) {
      const Enclosure next = zeta_real(x, terms);
      CHECK(next.inside(prev, 1e-12));
      CHECK(next.width() < prev.width());
      prev = next;
    }
  }
}

TEST_CASE("tail from k and power sums") {
  const Enclosure b1 = zeta_tail_from(2.0, 1);
  CHECK(b1.contains(oracle::kZeta2));
  CHECK(static_cast<double>(power_sum(2.0, 1, 3)) == doctest::Approx(1.0 + 0.25 + 1.0 / 9));
  CHECK(power_sum(2.0, 5, 4) == 0.0L);
}

TEST_CASE("lambert w") {
  CHECK(lambert_w(std::numbers::e) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(lambert_w(1.0) == doctest::Approx(oracle::kW1).epsilon(1e-14));
  for (double x : {1e-6, 0.1, 0.5, 3.0, 100.0, 1e4, 1e12}) {
    const double w = lambert_w(x);
    CHECK(w == doctest::Approx(oracle::lambert_w(x)).epsilon(1e-12));
    CHECK(std::abs(w * std::exp(w) - x) <= 1e-10 * x);
  }
  for (double x : {0.1, 1.0, std::numbers::e, 10.0, 100.0, 1e4}) {
    const double w = lambert_w(x);
    CHECK(std::abs(phi(x / w) - x) <= 1e-10 * x);
  }
  CHECK_THROWS_AS(lambert_w(0.0), DomainError);
  CHECK_THROWS_AS(lambert_w(-0.1), DomainError);
}

TEST_CASE("phi and its alpha derivative") {
  CHECK(phi(std::numbers::e) == doctest::Approx(std::numbers::e));
  CHECK(phi_alpha_deriv(std::numbers::e, 0.5) == doctest::Approx(std::exp(-0.5)).epsilon(1e-14));
  CHECK_THROWS_AS(phi_alpha_deriv(1.0, 0.5), DomainError);
  CHECK_THROWS_AS(phi_alpha_deriv(0.5, 0.5), DomainError);

  // Centered finite difference of (x log x)^alpha.
  for (double x : {2.0, 10.0, 1000.0}) {
    const double h = 1e-4 * x;
    const double fd = (std::pow(phi(x + h), 0.3) - std::pow(phi(x - h), 0.3)) / (2 * h);
    CHECK(phi_alpha_deriv(x, 0.3) == doctest::Approx(fd).epsilon(1e-6));
  }
}

TEST_CASE("decrease onset") {
  for (double beta : {0.3, 0.5, 0.9, 0.99}) {
    const double x0 = decrease_onset(beta);
    CHECK(x0 >= 2.0);
    for (double alpha : {beta / 2, beta}) {
      double prev = phi_alpha_deriv(std::max(x0 - 1.0, 1.0 + 1e-9), alpha);
      for (double x = std::max(x0 - 1.0, 1.0 + 1e-9) * 1.01; x < 1e8; x *= 1.01) {
        const double cur = phi_alpha_deriv(x, alpha);
        CHECK(cur <= prev * (1 + 1e-12));
        prev = cur;
      }
    }
  }
}

TEST_CASE("smooth membership") {
  const PrimeTable t = sieve_primes(100);
  CHECK(smooth_membership(1, 1, t));
  CHECK(smooth_membership(12, 2, t));
  CHECK_FALSE(smooth_membership(10, 2, t));
  for (std::uint64_t n = 1; n <= 2000; ++n)
    for (std::size_t r : {1u, 2u, 3u, 5u})
      CHECK(smooth_membership(n, r, t) == (oracle::largest_prime_factor(n) <= t.nth(r)));
}

TEST_CASE("tail recursion and prefix nesting") {
  for (double x : {1.3, 2.0, 5.0}) {
    for (std::uint64_t N : {2u, 10u, 777u}) {
      const Enclosure here = zeta_tail(x, N), before = zeta_tail(x, N - 1);
      CHECK(here.lo <= before.hi - std::pow(double(N), -x) + 1e-12);
      CHECK(here.hi >= before.lo - std::pow(double(N), -x) - 1e-12);
    }
    Enclosure prev = zeta_tail(x, 5, 0);
    for (std::uint64_t prefix : {10u, 1000u, 100'000u}) {
      const Enclosure next = zeta_tail(x, 5, prefix);
      CHECK(next.inside(prev, 1e-12));
      prev = next;
    }
  }
}

TEST_CASE("parallel map keeps index order and propagates errors") {
  const auto squares = parallel_map(1000, [](std::size_t i) { return i * i; });
  for (std::size_t i = 0; i < squares.size(); ++i) CHECK(squares[i] == i * i);
  CHECK(thread_count() >= 1);
  CHECK_THROWS_AS(parallel_map(50,
                               [](std::size_t i) -> int {
                                 if (i == 17) throw DomainError("boom");
                                 return 0;
                               }),
                  DomainError);
}
