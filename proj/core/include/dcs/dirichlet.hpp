#pragma once

#include <cstddef>
#include <cstdint>

#include "dcs/coeff_seq.hpp"
#include "dcs/primes.hpp"

namespace dcs {

// Dirichlet polynomial f(s) = sum a_n n^{-s} over a finite support.
class DirichletPoly {
 public:
  DirichletPoly() = default;
  explicit DirichletPoly(CoeffSeq coeffs) : coeffs_(std::move(coeffs)) {}

  const CoeffSeq& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  friend bool operator==(const DirichletPoly&, const DirichletPoly&) = default;

 private:
  CoeffSeq coeffs_;
};

// s = sigma + i t.
struct EvalPoint {
  double sigma = 0.0;
  double t = 0.0;
};

// Dirichlet convolution c_n = sum_{k | n} a_k b_{n/k}, kept for n <= limit.
// Enumerates support(f) x support(g) pairs whose product stays within the
// limit, then merges equal indices; exact for integer-valued coefficients.
DirichletPoly convolve(const DirichletPoly& f, const DirichletPoly& g, std::uint64_t limit);

// Largest index of the full product f * g, i.e. max supp f * max supp g
// (1 if either factor vanishes, the product being zero). Throws
// ResourceError on overflow.
std::uint64_t full_product_limit(const DirichletPoly& f, const DirichletPoly& g);

// f(s) with n^{-it} = e^{-i t log n}.
Complex evaluate(const DirichletPoly& f, const EvalPoint& s);

// tau_r f(s) = f(s + r): coefficients a_n n^{-r}.
DirichletPoly translate(const DirichletPoly& f, double r);

// Drops coefficients with index > N.
DirichletPoly truncate(const DirichletPoly& f, std::uint64_t N);

// Q_r f: keeps the coefficients whose index is p_1...p_r-smooth. Throws
// DomainError if the table holds fewer than r primes.
DirichletPoly qr_project(const DirichletPoly& f, std::size_t r, const PrimeTable& table);

}  // namespace dcs
