#include "dcs_cli/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>

#include "dcs/dcs.hpp"

namespace dcs::cli {
namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

const double kPs[] = {1.5, 2.0, 3.0};

const PrimeTable& primes_1e7() {
  static const PrimeTable table = sieve_primes(10'000'000);
  return table;
}

Outcome hardy(std::uint64_t seed) {
  constexpr std::size_t kSeqs = 1000;
  const SampleShape shape{16, 256, true, false};
  auto worst = parallel_map(kSeqs * 3, [&](std::size_t i) {
    Rng rng(task_seed(seed, i / 3));
    const CoeffSeq a = random_coeffs(rng, shape);
    const Exponent e(kPs[i % 3]);
    return hardy_ratio(a, e) / (e.p() / (e.p() - 1.0));
  });
  std::size_t violations = 0;
  double max_rel = 0.0;
  for (double w : worst) {
    if (w > 1.0) ++violations;
    max_rel = std::max(max_rel, w);
  }
  return {violations == 0,
          fmt("%zu cases, %zu violations, max ratio/bound %.6f", worst.size(), violations, max_rel)};
}

Outcome dual_oracle(std::uint64_t seed) {
  constexpr std::size_t kSeqs = 100;
  const SampleShape shape{6, 12, true, false};
  struct Case {
    bool inside = false;
    bool bennett = false;
    double gap = 0.0;
    std::string error;
  };
  auto cases = parallel_map(kSeqs * 3, [&](std::size_t i) {
    Rng rng(task_seed(seed, i / 3));
    const CoeffSeq b = random_coeffs(rng, shape);
    const Exponent e(kPs[i % 3]);
    Case c;
    try {
      const JagersTrace jt = jagers_dual_norm(b, e);
      const double o = dual_norm_oracle(b, e, 8, task_seed(seed, 1000 + i));
      c.gap = std::max(jt.norm.lo - o, o - jt.norm.hi);
      c.inside = jt.norm.contains(o, 1e-4);
      c.bennett = bennett_equivalence_check(b, e);
    } catch (const std::exception& ex) {
      c.error = ex.what();
    }
    return c;
  });
  std::size_t bad_oracle = 0, bad_bennett = 0, errors = 0;
  double worst = -INFINITY;
  for (const auto& c : cases) {
    if (!c.error.empty()) {
      ++errors;
      continue;
    }
    bad_oracle += !c.inside;
    bad_bennett += !c.bennett;
    worst = std::max(worst, c.gap);
  }
  return {bad_oracle == 0 && bad_bennett == 0 && errors == 0,
          fmt("%zu cases, oracle outside %zu, sandwich failures %zu, errors %zu, worst gap %.3g",
              cases.size(), bad_oracle, bad_bennett, errors, worst)};
}

Outcome point_eval(std::uint64_t) {
  const double target = std::sqrt(std::numbers::pi * std::numbers::pi / 6.0 - 1.0);
  const auto t0 = Clock::now();
  const Enclosure at1 = delta_norm_exact_p2(1.0, 1'000'000);
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  Outcome out;
  out.ok = at1.contains(target) && at1.width() <= 1e-6 && secs < 1.0;
  out.detail = fmt("sigma=1 [%.9f, %.9f] width %.2e%s", at1.lo, at1.hi, at1.width(),
                   secs < 1.0 ? "" : " (over 1s)");
  for (double sigma : {0.6, 0.75, 0.9}) {
    const Enclosure z = zeta_real(2.0 * sigma, 1'000'000);
    const Enclosure bracket((std::pow(2.0, sigma) - 1.0) * std::sqrt(z.lo - 1.0),
                            sigma * std::sqrt(z.hi - 1.0));
    const Enclosure ex = delta_norm_exact_p2(sigma, 1'000'000);
    const bool in = ex.inside(bracket);
    out.ok = out.ok && in;
    out.detail += fmt("; sigma=%.2f %s", sigma, in ? "inside" : "OUTSIDE");
  }
  return out;
}

Outcome sigma_threshold_suite(std::uint64_t) {
  constexpr double kTarget = 1.718011;
  constexpr double kTol = 1e-6;
  const double s2 = sigma_threshold(Exponent(2.0));
  Outcome out;
  out.ok = std::abs(s2 - kTarget) <= kTol;
  out.detail = fmt("sigma_2 = %.9f (target %.6f +- %.0e, off by %.2e)", s2, kTarget, kTol,
                   std::abs(s2 - kTarget));
  const double zeta_root = 1.0 / std::sqrt(std::numbers::pi * std::numbers::pi / 6.0);
  for (double sigma : {1.8, 2.5}) {
    std::vector<double> v(200);
    for (std::size_t n = 1; n <= v.size(); ++n) v[n - 1] = std::pow(double(n), -sigma);
    const JagersTrace jt = jagers_dual_norm(CoeffSeq::dense(v), Exponent(2.0));
    const bool chain = jt.m_chain.size() == 2 && jt.m_chain[0] == 1 &&
                       jt.m_chain[1] == kInfinityIndex && jt.d_set == std::vector<std::size_t>{1};
    const bool encl = jt.norm.contains(zeta_root) && jt.norm.width() <= 1e-6;
    out.ok = out.ok && chain && encl;
    out.detail += fmt("; sigma=%.1f D(b)%s{1}, [%.10f, %.10f] %s", sigma, chain ? "=" : "!=",
                      jt.norm.lo, jt.norm.hi, encl ? "contains zeta(2)^-1/2" : "MISSES zeta(2)^-1/2");
  }
  return out;
}

Outcome monomial(std::uint64_t seed) {
  Outcome out;
  std::size_t violations = 0;
  double worst_lower = INFINITY;
  for (std::uint64_t m : {2u, 3u, 4u, 10u}) {
    for (double p : {1.5, 2.0}) {
      const Exponent e(p);
      const MonomialCheck mc = monomial_multiplier_check(m, e, 100, 1'000'000, task_seed(seed, m));
      const double norm = std::pow(double(m), -1.0 / e.q());
      violations += mc.violations;
      const double rel = mc.lower_est / norm;
      worst_lower = std::min(worst_lower, rel);
      if (!mc.upper_ok || mc.lower_est < norm * (1.0 - 1e-5)) out.ok = false;
    }
  }
  out.detail = fmt("8 configurations x 100 samples, %zu upper violations, min probe/m^{-1/q} %.9f",
                   violations, worst_lower);
  return out;
}

Outcome ladder(std::uint64_t) {
  const PrimeTable& table = primes_1e7();
  const DirichletPoly f(CoeffSeq::ones(3));
  const Exponent e(2.0);
  const double reference = ar_norm(f.coeffs(), 0.5);
  const std::uint64_t conv_limit = table.limit() * f.coeffs().max_index();
  Outcome out;
  std::vector<double> ratios;
  std::size_t upper_violations = 0;
  for (std::uint64_t m : {10u, 50u, 100u}) {
    for (double alpha : {0.40, 0.45, 0.49}) {
      try {
        const MultiplierEstimate est = multiplier_lower_estimate(f, m, alpha, e, table, conv_limit);
        ratios.push_back(est.ratio);
        if (est.ratio > reference + 1e-9) ++upper_violations;
        out.detail += fmt("m=%llu a=%.2f ratio %.6f; ", (unsigned long long)m, alpha, est.ratio);
      } catch (const SearchFailure& ex) {
        out.ok = false;
        out.detail += fmt("m=%llu: %s; ", (unsigned long long)m, ex.what());
        break;
      }
    }
  }
  if (ratios.size() != 9) {
    out.ok = false;
    out.detail += fmt("only %zu of 9 ladder points computable at prime_limit 1e7", ratios.size());
    return out;
  }
  bool monotone = true;
  for (std::size_t i = 1; i < ratios.size(); ++i)
    if (ratios[i] < ratios[i - 1] - 1e-3) monotone = false;
  const double best = *std::max_element(ratios.begin(), ratios.end());
  out.ok = upper_violations == 0 && monotone && best > 0.8 * reference;
  out.detail += fmt("upper violations %zu, monotone %s, best %.6f vs 0.8*ref %.6f", upper_violations,
                    monotone ? "yes" : "no", best, 0.8 * reference);
  return out;
}

Outcome lemma_j(std::uint64_t) {
  Outcome out;
  std::size_t passed = 0, total = 0;
  for (std::uint64_t r0 : {100u, 1000u}) {
    for (double k : {2.0, 10.0}) {
      for (double alpha : {0.3, 0.5}) {
        const double C = k * phi(double(r0));
        std::vector<std::uint64_t> J;
        for (std::uint64_t r = r0; r <= phi_level_index(C); ++r) J.push_back(r);
        ++total;
        try {
          if (lemma_j_check(r0, C, C, alpha, 0.5, J)) ++passed;
        } catch (const std::exception& ex) {
          out.detail += fmt("r0=%llu: %s; ", (unsigned long long)r0, ex.what());
        }
      }
    }
  }
  double worst = 0.0;
  for (double x : {0.1, 1.0, std::numbers::e, 10.0, 1e4}) {
    const double w = lambert_w(x);
    worst = std::max(worst, std::abs(phi(x / w) - x) / x);
  }
  out.ok = passed == total && worst <= 1e-10;
  out.detail += fmt("lemma grid %zu/%zu, max W residual %.2e", passed, total, worst);
  return out;
}

Outcome projection(std::uint64_t seed) {
  const PrimeTable table = sieve_primes(100);
  const SampleShape shape{8, 64, false, true};
  auto mismatches = parallel_map(50, [&](std::size_t i) {
    Rng rng(task_seed(seed, i));
    const DirichletPoly f(random_coeffs(rng, shape));
    const DirichletPoly g(random_coeffs(rng, shape));
    const std::uint64_t limit = full_product_limit(f, g);
    const DirichletPoly fg = convolve(f, g, limit);
    int bad = 0;
    for (std::size_t r : {1u, 2u, 3u}) {
      const DirichletPoly lhs = qr_project(fg, r, table);
      const DirichletPoly rhs = convolve(qr_project(f, r, table), qr_project(g, r, table), limit);
      bad += !(lhs == rhs);
    }
    return bad;
  });
  int bad = 0;
  for (int b : mismatches) bad += b;
  return {bad == 0, fmt("150 (pair, r) cases, %d mismatches", bad)};
}

Outcome noncompact(std::uint64_t seed) {
  const SampleShape shape{8, 64, true, false};
  const std::uint64_t ms[] = {2, 8, 64};
  const double ps[] = {1.5, 2.0};
  auto results = parallel_map(50 * 6, [&](std::size_t i) {
    Rng rng(task_seed(seed, i / 6));
    const DirichletPoly f(random_coeffs(rng, shape));
    return noncompactness_measure(f, ms[(i % 6) / 2], Exponent(ps[i % 2]));
  });
  std::size_t violations = 0;
  double min_ratio = INFINITY;
  for (const auto& r : results) {
    violations += !r.holds;
    min_ratio = std::min(min_ratio, r.lhs / r.rhs);
  }
  return {violations == 0,
          fmt("%zu cases, %zu violations, min lhs/rhs %.6f", results.size(), violations, min_ratio)};
}

Outcome schur(std::uint64_t seed) {
  const Exponent e(2.0);
  const SchurResult conv = schur_test(SequenceSpec::log_power(1.0), e, 1'000'000);
  const SchurResult div = schur_test(SequenceSpec::log_power(0.4), e, 1'000'000);
  bool finite_ok = true;
  Rng rng(seed);
  for (int i = 0; i < 20; ++i) {
    const SchurResult r = schur_test(SequenceSpec::finite(random_coeffs(rng, {})), e, 100);
    finite_ok = finite_ok && r.verdict == SchurVerdict::schur;
  }
  const bool ok = conv.verdict == SchurVerdict::schur && std::isfinite(conv.value.hi) &&
                  div.verdict == SchurVerdict::not_schur && finite_ok;
  return {ok, fmt("log_power 1.0: %s [%.6f, %.6f]; log_power 0.4: %s; finite: %s", to_string(conv.verdict),
                  conv.value.lo, conv.value.hi, to_string(div.verdict),
                  finite_ok ? "all schur" : "NOT all schur")};
}

Outcome mn_chain(std::uint64_t seed) {
  constexpr double kSlack = 1e-10;
  const SampleShape shape{16, 128, true, false};
  auto bad = parallel_map(100, [&](std::size_t i) {
    Rng rng(task_seed(seed, i));
    const CoeffSeq a = random_coeffs(rng, shape);
    const MNValues mn = m_n_functionals_p2(a);
    const Enclosure c = ces_norm(a, Exponent(2.0));
    int v = 0;
    v += mn.N > mn.M + kSlack;
    v += mn.M > c.hi + kSlack;
    v += c.lo > std::sqrt(2.0) * mn.M + kSlack;
    v += std::sqrt(2.0) * mn.M > 2.0 * mn.N + kSlack;
    return v;
  });
  int violations = 0;
  for (int v : bad) violations += v;
  return {violations == 0, fmt("100 sequences, %d link violations", violations)};
}

struct Entry {
  SuiteInfo info;
  double budget;
  std::function<Outcome(std::uint64_t)> run;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {{1, "hardy"}, 10.0, hardy},
      {{2, "dual-oracle"}, 60.0, dual_oracle},
      {{3, "point-eval"}, 0.0, point_eval},
      {{4, "sigma-threshold"}, 0.0, sigma_threshold_suite},
      {{5, "monomial"}, 30.0, monomial},
      {{6, "multiplier-ladder"}, 180.0, ladder},
      {{7, "lemma-j"}, 5.0, lemma_j},
      {{8, "projection"}, 10.0, projection},
      {{9, "noncompactness"}, 30.0, noncompact},
      {{10, "schur"}, 5.0, schur},
      {{11, "mn-chain"}, 10.0, mn_chain},
  };
  return entries;
}

}  // namespace

const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> infos = [] {
    std::vector<SuiteInfo> v;
    for (const auto& e : registry()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

CriterionResult run_criterion(int id, std::uint64_t seed) {
  for (const auto& entry : registry()) {
    if (entry.info.id != id) continue;
    CriterionResult res;
    res.id = id;
    res.name = entry.info.name;
    res.budget_seconds = entry.budget;
    const auto t0 = Clock::now();
    try {
      const Outcome o = entry.run(seed);
      res.passed = o.ok;
      res.detail = o.detail;
    } catch (const std::exception& ex) {
      res.passed = false;
      res.detail = std::string("error: ") + ex.what();
    }
    res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    if (res.budget_seconds > 0 && res.seconds >= res.budget_seconds) {
      res.passed = false;
      res.detail += fmt(" (over the %.0fs budget)", res.budget_seconds);
    }
    return res;
  }
  throw InputError("unknown criterion " + std::to_string(id));
}

std::vector<CriterionResult> run_suite(const std::string& suite, std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (const auto& entry : registry()) {
    if (suite == "all" || suite == entry.info.name || suite == std::to_string(entry.info.id))
      out.push_back(run_criterion(entry.info.id, seed));
  }
  if (out.empty()) throw InputError("unknown suite \"" + suite + "\"");
  return out;
}

}  // namespace dcs::cli
