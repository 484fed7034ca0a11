#include "dcs/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "dcs/errors.hpp"

namespace dcs {

DirichletPoly convolve(const DirichletPoly& f, const DirichletPoly& g, std::uint64_t limit) {
  if (limit == 0) throw DomainError("convolution limit must be >= 1");
  const auto fe = f.coeffs().entries();
  const auto ge = g.coeffs().entries();
  std::vector<CoeffEntry> terms;
  for (const auto& x : fe) {
    if (x.index > limit) break;
    const std::uint64_t cap = limit / x.index;
    for (const auto& y : ge) {
      if (y.index > cap) break;
      terms.push_back({x.index * y.index, x.value * y.value});
    }
  }
  std::sort(terms.begin(), terms.end(),
            [](const CoeffEntry& a, const CoeffEntry& b) { return a.index < b.index; });
  std::vector<CoeffEntry> merged;
  merged.reserve(terms.size());
  for (const auto& t : terms) {
    if (!merged.empty() && merged.back().index == t.index) {
      merged.back().value += t.value;
    } else {
      merged.push_back(t);
    }
  }
  return DirichletPoly(CoeffSeq::from_sorted(std::move(merged)));
}

std::uint64_t full_product_limit(const DirichletPoly& f, const DirichletPoly& g) {
  const std::uint64_t a = f.coeffs().max_index();
  const std::uint64_t b = g.coeffs().max_index();
  if (a == 0 || b == 0) return 1;
  if (a > std::numeric_limits<std::uint64_t>::max() / b) {
    throw ResourceError("product support index overflows 64 bits");
  }
  return a * b;
}

Complex evaluate(const DirichletPoly& f, const EvalPoint& s) {
  Complex sum = 0.0;
  for (const auto& x : f.coeffs().entries()) {
    const double ln = std::log(static_cast<double>(x.index));
    sum += x.value * std::polar(std::exp(-s.sigma * ln), -s.t * ln);
  }
  return sum;
}

DirichletPoly translate(const DirichletPoly& f, double r) {
  std::vector<CoeffEntry> e(f.coeffs().entries().begin(), f.coeffs().entries().end());
  for (auto& x : e) x.value *= std::pow(static_cast<double>(x.index), -r);
  return DirichletPoly(CoeffSeq::from_sorted(std::move(e)));
}

DirichletPoly truncate(const DirichletPoly& f, std::uint64_t N) {
  const auto all = f.coeffs().entries();
  std::vector<CoeffEntry> e;
  for (const auto& x : all) {
    if (x.index > N) break;
    e.push_back(x);
  }
  return DirichletPoly(CoeffSeq::from_sorted(std::move(e)));
}

DirichletPoly qr_project(const DirichletPoly& f, std::size_t r, const PrimeTable& table) {
  if (r == 0) throw DomainError("Q_r needs r >= 1");
  if (r > table.count()) {
    throw DomainError("Q_r with r = " + std::to_string(r) + " needs a table of at least r primes");
  }
  std::vector<CoeffEntry> e;
  for (const auto& x : f.coeffs().entries()) {
    if (smooth_membership(x.index, r, table)) e.push_back(x);
  }
  return DirichletPoly(CoeffSeq::from_sorted(std::move(e)));
}

}  // namespace dcs
