#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cofilt/complex_core.hpp"
#include "cofilt/filter_gen.hpp"

namespace cofilt {

inline constexpr double kExactTolerance = 1e-10;    // identities exact up to rounding
inline constexpr double kDerivedTolerance = 1e-8;   // linear-algebra consequences

struct VerificationReport {
  std::string check_name;
  std::string kind;  // "D", "I" or "both"
  Complex alpha{};
  std::size_t n = 0;
  double tolerance = 0.0;
  double residual = 0.0;
  bool passed = false;
  std::string detail;
};

// Cyclic index rotation P_n^k. Never materialized as a matrix.
class CyclicShift {
 public:
  CyclicShift(std::size_t n, std::int64_t k);

  std::size_t size() const { return n_; }
  std::size_t amount() const { return k_; }  // normalized to [0, n)

  // Column action (P^k x)_i = x_{i - k}.
  ComplexVector apply(std::span<const Complex> x) const;
  // Row action (x^T P^k)_j = x_{j + k}.
  ComplexVector apply_to_row(std::span<const Complex> x) const;
  CyclicShift inverse() const;

 private:
  std::size_t n_;
  std::size_t k_;
};

/// Both kinds have real taps for real alpha. Residual max|Im| / max(1, max|tap|).
VerificationReport check_realness(double alpha, std::size_t n);

/// Integer order m: taps are the (signed) binomial row of (1 -/+ 1)^m when
/// m < n, and its n-periodic folding otherwise. Requires 1 <= m <= 62.
VerificationReport check_integer_reduction(unsigned m, std::size_t n);

/// Tap sums: 0 for Derivative, 2^alpha for Integral. The Integral residual
/// counts toward `passed` only for odd n; for even n it is recorded in detail.
VerificationReport check_sums(Complex alpha, std::size_t n);

/// taps(alpha) * taps(-alpha) == idft(masked ones), any kind and alpha.
VerificationReport check_convolution_inverse(FilterKind kind, Complex alpha, std::size_t n);

/// Derivative null-space system for Re(alpha) <= 0: the rows
/// taps(-alpha)^T (P^k - P^{k-1}), k = 3..n, and the all-ones row annihilate
/// reversed(taps(alpha)).
VerificationReport check_nullspace(Complex alpha, std::size_t n);

/// Integral constraint system for even n and Re(alpha) <= 0: the rows
/// taps(-alpha)^T P^k, k = 2..n, applied to reversed(taps(alpha)) reproduce
/// entries 1..n-1 of idft(masked ones).
VerificationReport check_integral_constraints(Complex alpha, std::size_t n);

/// Every check over the documented parameter grid.
std::vector<VerificationReport> run_default_grid();

/// Alpha values Re in {-2,-0.5,0,0.5,2} x Im in {-1,0,1}.
std::vector<Complex> alpha_grid();
/// Lengths {4,5,7,8,16}.
std::vector<std::size_t> length_grid();

/// `PASS|FAIL <name> kind=<k> alpha=<a> n=<n> residual=<r>`
std::string format_report_line(const VerificationReport& report);

}  // namespace cofilt
