#include "dcs/dual.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "dcs/errors.hpp"
#include "dcs/norms.hpp"
#include "dcs/parallel.hpp"

namespace dcs {

namespace {

struct Candidate {
  std::uint64_t index;
  double mag;
  long double partial;  // sum_{i < index} i^{-p}, so B_m - B_j = partial_j - partial_m
};

struct Quotient {
  double lo;
  double hi;
  bool overlaps(const Quotient& o) const { return lo <= o.hi && o.lo <= hi; }
};

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr long double kEpsLd = std::numeric_limits<long double>::epsilon();

Quotient finite_quotient(const Candidate& m, const Candidate& j) {
  const double num = m.mag - j.mag;
  const double num_err = 2.0 * kEps * (m.mag + j.mag);
  const long double den = j.partial - m.partial;
  const long double den_err = 4.0L * kEpsLd * static_cast<long double>(j.index + 1) * j.partial;
  return {static_cast<double>((num - num_err) / (den + den_err)),
          static_cast<double>((num + num_err) / (den - den_err))};
}

struct Tie {
  std::vector<std::uint64_t> a;
  std::vector<std::uint64_t> b;
};

struct ChainResult {
  std::vector<std::size_t> chain;  // positions into the candidate list
  std::optional<Tie> tie;
};

std::uint64_t index_of(const std::vector<Candidate>& c, std::size_t pos) {
  return pos == c.size() ? kInfinityIndex : c[pos].index;
}

ChainResult build_chain(const std::vector<Candidate>& c, double p, std::uint64_t prefix) {
  const std::size_t sentinel = c.size();
  std::size_t first = 0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k].mag >= c[first].mag) first = k;
  }
  ChainResult out;
  out.chain.push_back(first);
  std::size_t cur = first;
  while (true) {
    const Enclosure bm = zeta_tail_from(p, c[cur].index, prefix);
    const Quotient to_inf{widen_down(c[cur].mag / bm.hi, 2), widen_up(c[cur].mag / bm.lo, 2)};

    std::vector<std::pair<std::size_t, Quotient>> cands;
    cands.reserve(c.size() - cur);
    for (std::size_t j = cur + 1; j < c.size(); ++j) cands.emplace_back(j, finite_quotient(c[cur], c[j]));
    cands.emplace_back(sentinel, to_inf);

    std::size_t best = 0;
    for (std::size_t k = 1; k < cands.size(); ++k) {
      const double mk = 0.5 * (cands[k].second.lo + cands[k].second.hi);
      const double mb = 0.5 * (cands[best].second.lo + cands[best].second.hi);
      if (mk <= mb) best = k;  // ties resolve to the larger index
    }
    for (std::size_t k = 0; k < cands.size(); ++k) {
      if (k == best || !cands[k].second.overlaps(cands[best].second)) continue;
      Tie tie;
      for (const auto pos : out.chain) {
        tie.a.push_back(index_of(c, pos));
        tie.b.push_back(index_of(c, pos));
      }
      const auto [lo, hi] = std::minmax(cands[k].first, cands[best].first);
      tie.a.push_back(index_of(c, lo));
      tie.b.push_back(index_of(c, hi));
      out.tie = std::move(tie);
      return out;
    }
    const std::size_t next = cands[best].first;
    out.chain.push_back(next);
    if (next == sentinel) return out;
    cur = next;
  }
}

std::string format_chain(const std::vector<std::uint64_t>& chain) {
  std::string s = "[";
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i) s += ", ";
    s += chain[i] == kInfinityIndex ? std::string("inf") : std::to_string(chain[i]);
  }
  return s + "]";
}

}  // namespace

JagersTrace jagers_dual_norm(const CoeffSeq& b, const Exponent& e, const JagersOptions& opts) {
  if (b.empty()) return {{kInfinityIndex}, {}, {0.0, 0.0}};
  const double p = e.p();
  const double q = e.q();

  std::vector<Candidate> c;
  c.reserve(b.size());
  long double partial = 0.0L;
  std::uint64_t next = 1;
  for (const auto& x : b.entries()) {
    partial += power_sum(p, next, x.index - 1);
    next = x.index;
    c.push_back({x.index, std::abs(x.value), partial});
  }

  std::optional<Tie> last_tie;
  for (int round = 0; round <= opts.tightening_rounds; ++round) {
    const std::uint64_t prefix = opts.tail_prefix << round;
    ChainResult r = build_chain(c, p, prefix);
    if (r.tie) {
      last_tie = std::move(r.tie);
      continue;
    }

    JagersTrace trace;
    long double lo = 0.0L;
    long double hi = 0.0L;
    for (std::size_t k = 0; k + 1 < r.chain.size(); ++k) {
      const Candidate& m = c[r.chain[k]];
      trace.m_chain.push_back(m.index);
      trace.d_set.push_back(k + 1);
      if (r.chain[k + 1] == c.size()) {
        // Final step to infinity: |b_m|^q B_m^{1-q}, decreasing in B_m.
        const Enclosure bm = zeta_tail_from(p, m.index, prefix);
        const long double mq = std::pow(static_cast<long double>(m.mag), q);
        lo += mq * std::pow(static_cast<long double>(bm.hi), 1.0L - q);
        hi += mq * std::pow(static_cast<long double>(bm.lo), 1.0L - q);
      } else {
        const Candidate& j = c[r.chain[k + 1]];
        const long double num = std::max(0.0L, static_cast<long double>(m.mag) - j.mag);
        const long double den = j.partial - m.partial;
        const long double term = std::pow(num, static_cast<long double>(q)) * std::pow(den, 1.0L - q);
        lo += term;
        hi += term;
      }
    }
    trace.m_chain.push_back(kInfinityIndex);
    const Enclosure powered = widen_for_terms(
        Enclosure(static_cast<double>(lo), static_cast<double>(hi)), 8 * r.chain.size() + 8);
    trace.norm = pow(Enclosure(std::max(0.0, powered.lo), powered.hi), 1.0 / q);
    return trace;
  }
  throw TieError("jagers_dual_norm: argmin ambiguous between chains " + format_chain(last_tie->a) +
                     " and " + format_chain(last_tie->b),
                 last_tie->a, last_tie->b);
}

namespace {

// Maximizes sum_k beta_k t_k / (sum_k w_k (t_1 + ... + t_k)^p)^{1/p} over t >= 0.
class RatioAscent {
 public:
  RatioAscent(std::vector<double> beta, std::vector<double> weights, double p)
      : beta_(std::move(beta)), w_(std::move(weights)), p_(p) {}

  double value(const std::vector<double>& t) const {
    long double lin = 0.0L;
    long double acc = 0.0L;
    long double f = 0.0L;
    for (std::size_t k = 0; k < t.size(); ++k) {
      lin += beta_[k] * t[k];
      acc += t[k];
      f += w_[k] * std::pow(acc, static_cast<long double>(p_));
    }
    if (f <= 0.0L) return 0.0;
    return static_cast<double>(lin / std::pow(f, 1.0L / p_));
  }

  double run(std::vector<double> t) const {
    const std::size_t d = t.size();
    double current = value(t);
    std::vector<double> dir(d, 0.0);
    for (int sweep = 0; sweep < 4000; ++sweep) {
      const double before = current;
      for (std::size_t k = 0; k < d; ++k) {
        std::fill(dir.begin(), dir.end(), 0.0);
        dir[k] = 1.0;
        current = line_search(t, dir, current);
      }
      for (std::size_t k = 0; k + 1 < d; ++k) {
        std::fill(dir.begin(), dir.end(), 0.0);
        dir[k] = 1.0;
        dir[k + 1] = -1.0;
        current = line_search(t, dir, current);
      }
      double total = 0.0;
      for (const double x : t) total += x;
      if (total > 0.0) {
        for (double& x : t) x /= total;
      }
      if (current - before <= 1e-15 * current) break;
    }
    return current;
  }

 private:
  // Quasi-concave along any line through the positive orthant, so golden
  // section is valid. Moves t and returns the new value if it improves.
  double line_search(std::vector<double>& t, const std::vector<double>& dir, double current) const {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (dir[i] > 0.0) lo = std::max(lo, -t[i] / dir[i]);
      if (dir[i] < 0.0) hi = std::min(hi, t[i] / -dir[i]);
    }
    std::vector<double> trial(t.size());
    auto at = [&](double x) {
      for (std::size_t i = 0; i < t.size(); ++i) trial[i] = std::max(0.0, t[i] + x * dir[i]);
      return value(trial);
    };
    if (!std::isfinite(hi)) {
      double total = 0.0;
      for (const double x : t) total += x;
      hi = std::max(1.0, 2.0 * total);
      for (int i = 0; i < 80 && at(hi) > at(0.5 * hi); ++i) hi *= 2.0;
    }
    if (!(hi > lo)) return current;

    constexpr double kInvPhi = 0.6180339887498949;
    double a = lo;
    double b = hi;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = at(x1);
    double f2 = at(x2);
    for (int it = 0; it < 200 && (b - a) > 1e-15 * (1.0 + std::abs(a) + std::abs(b)); ++it) {
      if (f1 < f2) {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + kInvPhi * (b - a);
        f2 = at(x2);
      } else {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - kInvPhi * (b - a);
        f1 = at(x1);
      }
    }
    double best_x = 0.0;
    double best = current;
    for (const double x : {lo, hi, 0.5 * (a + b)}) {
      const double v = at(x);
      if (v > best) {
        best = v;
        best_x = x;
      }
    }
    if (best_x != 0.0) {
      for (std::size_t i = 0; i < t.size(); ++i) t[i] = std::max(0.0, t[i] + best_x * dir[i]);
    }
    return best;
  }

  std::vector<double> beta_;
  std::vector<double> w_;
  double p_;
};

}  // namespace

double dual_norm_oracle(const CoeffSeq& b, const Exponent& e, std::size_t restarts,
                        std::uint64_t seed) {
  if (b.size() > kMaxOracleSupport) {
    throw ResourceError("dual_norm_oracle supports at most " + std::to_string(kMaxOracleSupport) +
                        " entries, got " + std::to_string(b.size()));
  }
  if (b.empty()) return 0.0;
  if (restarts == 0) throw DomainError("dual_norm_oracle needs at least one restart");
  const double p = e.p();
  const auto entries = b.entries();
  const std::size_t d = entries.size();

  std::vector<double> beta(d);
  std::vector<double> weights(d);
  for (std::size_t k = 0; k < d; ++k) {
    beta[k] = std::abs(entries[k].value);
    if (k + 1 < d) {
      weights[k] = static_cast<double>(power_sum(p, entries[k].index, entries[k + 1].index - 1));
    } else {
      weights[k] = zeta_tail_from(p, entries[k].index).hi;
    }
  }
  const RatioAscent ascent(std::move(beta), std::move(weights), p);

  const auto results = parallel_map(restarts, [&](std::size_t i) {
    Rng rng(task_seed(seed, i));
    std::vector<double> t(d);
    for (double& x : t) x = 0.01 + uniform01(rng);
    return ascent.run(std::move(t));
  });
  return *std::max_element(results.begin(), results.end());
}

bool bennett_equivalence_check(const CoeffSeq& b, const Exponent& e) {
  const JagersTrace trace = jagers_dual_norm(b, e);
  const double d = dq_norm(b, e);
  const double lower = d / e.q();
  const double upper = std::pow(e.p() - 1.0, 1.0 / e.p()) * d;
  // A violation counts only when the whole enclosure lies outside the bound.
  const double slack = kBennettSlack * std::max(1.0, d) + trace.norm.width();
  return trace.norm.lo >= lower - slack && trace.norm.hi <= upper + slack;
}

}  // namespace dcs
