#pragma once

#include <cstdint>
#include <vector>

#include "dcs/coeff_seq.hpp"
#include "dcs/enclosure.hpp"
#include "dcs/exponent.hpp"
#include "dcs/zeta.hpp"

namespace dcs {

// ces_p norm (sum_n ((1/n) sum_{k<=n} |a_k|)^p)^{1/p}. With N the largest
// support index and A_n the prefix sums of |a_k|, the infinite tail collapses
// to A_N^p * sum_{n>=N} n^{-p}, which is enclosed via zeta_tail.
Enclosure ces_norm(const CoeffSeq& a, const Exponent& e,
                   std::uint64_t tail_prefix = kDefaultTailPrefix);

// (sum |a_n|^p)^{1/p}, p >= 1.
double lp_norm(const CoeffSeq& a, double p);

// (sup_{k>=n} |b_k|)_{n=1..horizon}. Throws DomainError if horizon is below
// the largest support index.
std::vector<double> least_decreasing_majorant(const CoeffSeq& b, std::uint64_t horizon);

// d(q) norm (sum_n sup_{k>=n} |b_k|^q)^{1/q}; exact for finite support.
double dq_norm(const CoeffSeq& b, const Exponent& e);

// A^r norm sum |a_n| n^{-r}.
double ar_norm(const CoeffSeq& a, double r);

// ces_norm(a).hi / lp_norm(a, p). Bounded by p/(p-1) (Hardy). Throws
// DomainError for the zero sequence.
double hardy_ratio(const CoeffSeq& a, const Exponent& e);

struct MNValues {
  double M = 0.0;
  double N = 0.0;
};

inline constexpr std::size_t kMaxMNSupport = 10'000;

// The two p = 2 functionals
//   M(a) = (sum_{i,j} |a_i||a_j| / max(i,j))^{1/2}   (direct double sum)
//   N(a) = (sum_n (|a_n|/n) sum_{k<=n} |a_k|)^{1/2}  (one pass)
// Throws ResourceError above kMaxMNSupport support entries.
MNValues m_n_functionals_p2(const CoeffSeq& a);

}  // namespace dcs
