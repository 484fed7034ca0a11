#include "dcs_cli/cli.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "dcs/dcs.hpp"
#include "dcs_cli/io.hpp"
#include "dcs_cli/report.hpp"
#include "dcs_cli/verify.hpp"

namespace dcs::cli {
namespace {

struct Common {
  double p = 2.0;
  std::string format = "json";
  std::uint64_t seed = kDefaultSeed;
};

Format parse_format(const std::string& s) { return s == "csv" ? Format::csv : Format::json; }

void add_format(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
}

void add_p(CLI::App* sub, Common& c) {
  sub->add_option("--p", c.p, "Exponent p > 1")->capture_default_str();
}

void add_seed(CLI::App* sub, Common& c) {
  sub->add_option("--seed", c.seed, "Seed for randomized campaigns")->capture_default_str();
}

std::string chain_string(const std::vector<std::uint64_t>& chain) {
  std::string s;
  for (auto m : chain) {
    if (!s.empty()) s += ' ';
    s += m == kInfinityIndex ? "inf" : std::to_string(m);
  }
  return s;
}

std::string coeff_output(const CoeffSeq& a, Format format) {
  if (format == Format::json) return emit_coeffs(a);
  Report rep;
  rep.columns = {"n", "re", "im"};
  for (const auto& [n, v] : a.entries()) {
    Record r;
    r.set("n", n).set("re", v.real()).set("im", v.imag());
    rep.records.push_back(std::move(r));
  }
  return emit_report(rep, Format::csv);
}

PrimeTable table_with_primes(std::size_t r) {
  std::uint64_t limit = 64;
  for (;;) {
    PrimeTable t = sieve_primes(limit);
    if (t.count() >= r) return t;
    limit *= 2;
  }
}

}  // namespace

int parse_and_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Norms, dual norms and multipliers on Dirichlet series spaces", "dcs"};
  app.require_subcommand(1, 1);
  app.set_help_all_flag("--help-all", "Help for every verb");

  Common c;
  std::function<std::string()> action;
  int verify_exit = kExitOk;

  // norm
  auto* norm = app.add_subcommand("norm", "Norm of a coefficient sequence");
  std::string input, space = "ces";
  std::optional<double> r_weight;
  std::uint64_t tail_prefix = kDefaultTailPrefix;
  norm->add_option("--input", input, "Coefficient JSON file")->required();
  norm->add_option("--space", space, "ces | lp | dq | ar | hardy")
      ->check(CLI::IsMember({"ces", "lp", "dq", "ar", "hardy"}))
      ->capture_default_str();
  norm->add_option("--r", r_weight, "Weight for the ar space (default 1/q)");
  norm->add_option("--tail-prefix", tail_prefix, "Explicit tail terms for ces")
      ->capture_default_str();
  add_p(norm, c);
  add_format(norm, c);
  norm->callback([&] {
    action = [&] {
      const CoeffSeq a = load_coeffs(input);
      const Exponent e(c.p);
      Record r;
      r.set("verb", "norm").set("space", space).set("p", e.p()).set("support", a.size());
      if (space == "ces") {
        r.set("norm", ces_norm(a, e, tail_prefix));
      } else if (space == "lp") {
        r.set("norm", lp_norm(a, e.p()));
      } else if (space == "dq") {
        r.set("q", e.q()).set("norm", dq_norm(a, e));
      } else if (space == "ar") {
        const double w = r_weight.value_or(1.0 / e.q());
        r.set("r", w).set("norm", ar_norm(a, w));
      } else {
        r.set("ratio", hardy_ratio(a, e)).set("bound", e.p() / (e.p() - 1.0));
      }
      return emit_report({{}, {r}}, parse_format(c.format));
    };
  });

  // dual-norm
  auto* dual = app.add_subcommand("dual-norm", "Exact ces_p dual norm (greedy chain)");
  std::string method = "jagers";
  std::size_t restarts = 16;
  dual->add_option("--input", input, "Coefficient JSON file")->required();
  dual->add_option("--method", method, "jagers | oracle | both")
      ->check(CLI::IsMember({"jagers", "oracle", "both"}))
      ->capture_default_str();
  dual->add_option("--restarts", restarts, "Oracle random restarts")->capture_default_str();
  add_p(dual, c);
  add_seed(dual, c);
  add_format(dual, c);
  dual->callback([&] {
    action = [&] {
      const CoeffSeq b = load_coeffs(input);
      const Exponent e(c.p);
      Record r;
      r.set("verb", "dual-norm").set("p", e.p()).set("support", b.size());
      if (method != "oracle") {
        const JagersTrace jt = jagers_dual_norm(b, e);
        r.set("norm", jt.norm);
        r.set("chain", chain_string(jt.m_chain)).set("d_size", jt.d_set.size());
        r.set("bennett_ok", bennett_equivalence_check(b, e));
      }
      if (method != "jagers") {
        r.set("oracle", dual_norm_oracle(b, e, restarts, c.seed)).set("seed", c.seed);
      }
      return emit_report({{}, {r}}, parse_format(c.format));
    };
  });

  // delta-norm
  auto* delta = app.add_subcommand("delta-norm", "Norm of point evaluation at sigma + it");
  double sigma = 0.0, t = 0.0;
  bool exact = false;
  std::uint64_t terms = 1'000'000;
  delta->add_option("--sigma", sigma, "Real part of the evaluation point")->required();
  delta->add_flag("--exact", exact, "Also compute the exact p = 2 value (1/2 < sigma <= 1)");
  delta->add_option("--terms", terms, "Explicit terms for --exact")->capture_default_str();
  add_p(delta, c);
  add_format(delta, c);
  delta->callback([&] {
    action = [&] {
      const Exponent e(c.p);
      const DeltaBounds db = delta_norm_bounds(sigma, e);
      Record r;
      r.set("verb", "delta-norm").set("p", e.p()).set("sigma", sigma);
      r.set("bounds_lo", db.lo).set("bounds_hi", db.hi);
      if (exact) {
        if (e.p() != 2.0) throw DomainError("--exact requires p = 2");
        r.set("exact", delta_norm_exact_p2(sigma, terms));
      }
      return emit_report({{}, {r}}, parse_format(c.format));
    };
  });

  // eval
  auto* eval = app.add_subcommand("eval", "Evaluate a Dirichlet polynomial at s = sigma + it");
  eval->add_option("--input", input, "Coefficient JSON file")->required();
  eval->add_option("--sigma", sigma, "Real part")->required();
  eval->add_option("--t", t, "Imaginary part")->capture_default_str();
  add_format(eval, c);
  eval->callback([&] {
    action = [&] {
      const Complex v = evaluate(DirichletPoly(load_coeffs(input)), {sigma, t});
      Record r;
      r.set("verb", "eval").set("sigma", sigma).set("t", t);
      r.set("re", v.real()).set("im", v.imag()).set("abs", std::abs(v));
      return emit_report({{}, {r}}, parse_format(c.format));
    };
  });

  // convolve
  auto* conv = app.add_subcommand("convolve", "Dirichlet convolution (product of series)");
  std::string other;
  std::uint64_t limit = 0;
  conv->add_option("--input", input, "First factor")->required();
  conv->add_option("--with", other, "Second factor")->required();
  conv->add_option("--limit", limit, "Largest kept index (0: full product)")->capture_default_str();
  add_format(conv, c);
  conv->callback([&] {
    action = [&] {
      const DirichletPoly f(load_coeffs(input)), g(load_coeffs(other));
      const std::uint64_t lim = limit == 0 ? full_product_limit(f, g) : limit;
      return coeff_output(convolve(f, g, lim).coeffs(), parse_format(c.format));
    };
  });

  // project
  auto* proj = app.add_subcommand("project", "Keep the p_1...p_r-smooth coefficients");
  std::size_t r_primes = 1;
  proj->add_option("--input", input, "Coefficient JSON file")->required();
  proj->add_option("--r", r_primes, "Number of primes")->required()->check(CLI::PositiveNumber);
  add_format(proj, c);
  proj->callback([&] {
    action = [&] {
      const DirichletPoly f(load_coeffs(input));
      return coeff_output(qr_project(f, r_primes, table_with_primes(r_primes)).coeffs(),
                          parse_format(c.format));
    };
  });

  // multiplier-estimate
  auto* mult = app.add_subcommand("multiplier-estimate", "Lower estimates of a multiplier norm");
  std::vector<std::uint64_t> ms{10};
  std::vector<double> alphas{0.49};
  std::uint64_t prime_limit = 10'000'000, conv_limit = 0;
  mult->add_option("--input", input, "Coefficients of f")->required();
  mult->add_option("--m", ms, "Ladder values of m (>= 2)")->capture_default_str();
  mult->add_option("--alpha", alphas, "Ladder values of alpha in (1/(2q), 1/q)")
      ->capture_default_str();
  mult->add_option("--prime-limit", prime_limit, "Sieve limit")->capture_default_str();
  mult->add_option("--conv-limit", conv_limit, "Convolution limit (0: prime_limit * max supp f)")
      ->capture_default_str();
  add_p(mult, c);
  add_format(mult, c);
  mult->callback([&] {
    action = [&] {
      const DirichletPoly f(load_coeffs(input));
      const Exponent e(c.p);
      const PrimeTable table = sieve_primes(prime_limit);
      const std::uint64_t cl =
          conv_limit == 0 ? prime_limit * std::max<std::uint64_t>(1, f.coeffs().max_index())
                          : conv_limit;
      Report rep;
      rep.columns = {"m", "alpha", "prime_limit", "conv_limit", "ratio", "reference", "flag"};
      for (auto m : ms) {
        for (double alpha : alphas) {
          const MultiplierEstimate est = multiplier_lower_estimate(f, m, alpha, e, table, cl);
          Record r;
          r.set("m", est.m).set("alpha", est.alpha).set("p", e.p()).set("r_m", est.r_m);
          r.set("prime_limit", est.prime_limit).set("conv_limit", est.conv_limit);
          r.set("ratio", est.ratio).set("reference", est.reference);
          r.set("g_norm", est.g_norm).set("fg_norm", est.fg_norm);
          r.set("flag", est.heuristic_window ? "heuristic-window" : "");
          rep.records.push_back(std::move(r));
        }
      }
      return emit_report(rep, parse_format(c.format));
    };
  });

  // monomial-check
  auto* mono = app.add_subcommand("monomial-check", "Multiplier norm of m^{-s}");
  std::uint64_t m_mono = 2, j_probe = 1'000'000;
  std::size_t samples = 100;
  mono->add_option("--m", m_mono, "Monomial index")->required()->check(CLI::PositiveNumber);
  mono->add_option("--samples", samples, "Random test functions")->capture_default_str();
  mono->add_option("--j", j_probe, "Probe index for the lower estimate")->capture_default_str();
  add_p(mono, c);
  add_seed(mono, c);
  add_format(mono, c);
  mono->callback([&] {
    action = [&] {
      const Exponent e(c.p);
      const MonomialCheck mc = monomial_multiplier_check(m_mono, e, samples, j_probe, c.seed);
      Record r;
      r.set("verb", "monomial-check").set("m", m_mono).set("p", e.p()).set("seed", c.seed);
      r.set("samples", samples).set("j", j_probe);
      r.set("expected", std::pow(double(m_mono), -1.0 / e.q()));
      r.set("upper_ok", mc.upper_ok).set("violations", mc.violations);
      r.set("worst_ratio", mc.worst_ratio).set("lower_est", mc.lower_est);
      return emit_report({{}, {r}}, parse_format(c.format));
    };
  });

  // schur-test
  auto* schur = app.add_subcommand("schur-test", "Schur multiplier test");
  std::string kind = "finite";
  double alpha = 1.0, beta = 1.0;
  std::uint64_t horizon = 1'000'000;
  schur->add_option("--kind", kind, "finite | log-power | power")
      ->check(CLI::IsMember({"finite", "log-power", "power"}))
      ->capture_default_str();
  schur->add_option("--input", input, "Coefficients (finite kind)");
  schur->add_option("--alpha", alpha, "Exponent of (log n)^{-alpha}")->capture_default_str();
  schur->add_option("--beta", beta, "Exponent of n^{-beta}")->capture_default_str();
  schur->add_option("--horizon", horizon, "Explicit terms")->capture_default_str();
  add_p(schur, c);
  add_format(schur, c);
  schur->callback([&] {
    action = [&] {
      const Exponent e(c.p);
      if (kind == "finite" && input.empty()) throw InputError("--input is required for --kind finite");
      const SequenceSpec spec = kind == "finite"      ? SequenceSpec::finite(load_coeffs(input))
                                : kind == "log-power" ? SequenceSpec::log_power(alpha)
                                                      : SequenceSpec::power(beta);
      const SchurResult res = schur_test(spec, e, horizon);
      Record r;
      r.set("verb", "schur-test").set("kind", kind).set("p", e.p());
      if (kind == "log-power") r.set("alpha", alpha);
      if (kind == "power") r.set("beta", beta);
      r.set("horizon", horizon).set("verdict", to_string(res.verdict)).set("value", res.value);
      return emit_report({{}, {r}}, parse_format(c.format));
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Run acceptance suites");
  std::string suite = "all";
  bool timing = false;
  verify->add_option("--suite", suite, "all, a suite name or its number")->capture_default_str();
  verify->add_flag("--timing", timing, "Include wall-clock seconds (not reproducible)");
  add_seed(verify, c);
  add_format(verify, c);
  verify->callback([&] {
    action = [&] {
      Report rep;
      rep.columns = {"id", "name", "passed", "budget_seconds", "detail"};
      if (timing) rep.columns.insert(rep.columns.begin() + 3, "seconds");
      for (const auto& res : run_suite(suite, c.seed)) {
        Record r;
        r.set("id", res.id).set("name", res.name).set("passed", res.passed);
        if (timing) r.set("seconds", res.seconds);
        r.set("budget_seconds", res.budget_seconds);
        r.set("detail", res.detail).set("seed", c.seed);
        if (!res.passed) verify_exit = kExitVerifyFailed;
        rep.records.push_back(std::move(r));
      }
      return emit_report(rep, parse_format(c.format));
    };
  });

  // report
  auto* report = app.add_subcommand("report", "Convert a JSON report");
  std::vector<std::string> columns;
  std::string report_format = "csv";
  report->add_option("--input", input, "JSON report file")->required();
  report->add_option("--columns", columns, "CSV columns (default: all)");
  report->add_option("--format", report_format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  report->callback([&] {
    action = [&] {
      return emit_report({columns, parse_report_json(read_file(input))}, parse_format(report_format));
    };
  });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    out << action();
    return verify_exit;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const SearchFailure& e) {
    err << "search failure: " << e.what() << "\n";
    return kExitDomain;
  } catch (const TieError& e) {
    err << "unresolved tie: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}

int parse_and_dispatch(const std::vector<std::string>& args) {
  return parse_and_dispatch(args, std::cout, std::cerr);
}

}  // namespace dcs::cli
