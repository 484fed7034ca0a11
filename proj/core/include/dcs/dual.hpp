#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "dcs/coeff_seq.hpp"
#include "dcs/enclosure.hpp"
#include "dcs/exponent.hpp"
#include "dcs/sampling.hpp"
#include "dcs/zeta.hpp"

namespace dcs {

// Index value standing for the point at infinity, where b = B = 0.
inline constexpr std::uint64_t kInfinityIndex = std::numeric_limits<std::uint64_t>::max();

// Result of the greedy chain computing the exact ces_p dual norm.
struct JagersTrace {
  // m(1), m(2), ...; the last entry is kInfinityIndex unless b = 0, in which
  // case the chain is just {kInfinityIndex}.
  std::vector<std::uint64_t> m_chain;
  // Positions k >= 1 with m(k) finite.
  std::vector<std::size_t> d_set;
  Enclosure norm;
};

// Raised when two candidates of the argmin cannot be separated even after
// tightening the tail enclosures.
class TieError : public std::runtime_error {
 public:
  TieError(const std::string& what, std::vector<std::uint64_t> first,
           std::vector<std::uint64_t> second)
      : std::runtime_error(what), chain_a(std::move(first)), chain_b(std::move(second)) {}

  std::vector<std::uint64_t> chain_a;
  std::vector<std::uint64_t> chain_b;
};

struct JagersOptions {
  std::uint64_t tail_prefix = kDefaultTailPrefix;
  // Each round doubles tail_prefix before giving up with TieError.
  int tightening_rounds = 3;
};

// Isometric dual norm of ces_p:
//   ||b||_* = (sum_{n in D(b)} slope_n^q (B_{m(n)} - B_{m(n+1)}))^{1/q},
// slope_n = (|b_{m(n)}| - |b_{m(n+1)}|) / (B_{m(n)} - B_{m(n+1)}).
// The chain: m(1) = largest maximizer of |b_k|; m(n+1) = largest minimizer
// over j > m(n), j = infinity allowed, of
//   (|b_{m(n)}| - |b_j|) / (B_{m(n)} - B_j),   B_k = sum_{j>=k} j^{-p}.
// Zero-coefficient indices never win the argmin against infinity (their
// quotient strictly exceeds |b_m|/B_m), so only support indices and the
// sentinel are scanned.
JagersTrace jagers_dual_norm(const CoeffSeq& b, const Exponent& e, const JagersOptions& opts = {});

inline constexpr std::size_t kMaxOracleSupport = 8;

// Numerical sup of |sum a_n b_n| over sequences a supported on supp(b) with
// ces_norm(a) <= 1. Phases of a are aligned with b, leaving a maximization of
// sum t_k |b_k| / ||t||_ces over t >= 0, done by coordinate ascent (single
// coordinates and adjacent transfers) from `restarts` random starts. The ces
// norm is bounded from above, so the result is a lower bound on the dual norm.
// Throws ResourceError for supports above kMaxOracleSupport.
double dual_norm_oracle(const CoeffSeq& b, const Exponent& e, std::size_t restarts,
                        std::uint64_t seed = kDefaultSeed);

// Slack used when comparing the Jagers enclosure to the d(q) bounds.
inline constexpr double kBennettSlack = 1e-12;

// (1/q) ||b||_{d(q)} <= ||b||_* <= (p-1)^{1/p} ||b||_{d(q)}, checked against
// the Jagers enclosure. Propagates TieError.
bool bennett_equivalence_check(const CoeffSeq& b, const Exponent& e);

}  // namespace dcs
