#pragma once

#include <cstddef>
#include <vector>

#include "cofilt/complex_core.hpp"

namespace cofilt {

enum class FilterKind { Derivative, Integral };

enum class Route { Spectral, FoldedSeries };

// Frequency-domain multiplier (1 -/+ e^{-2 pi i j / n})^alpha with the zero
// bins of the base forced to 0.
struct SpectralSymbol {
  FilterKind kind = FilterKind::Derivative;
  Complex order{};
  ComplexVector bins;
  std::vector<std::size_t> masked_bins;

  std::size_t length() const { return bins.size(); }
};

struct Filter1D {
  FilterKind kind = FilterKind::Derivative;
  Complex order{};
  ComplexVector taps;
  Route route = Route::Spectral;

  // Folded route only.
  bool budget_exhausted = false;   // max_terms reached before the tolerance rule fired
  bool tail_extrapolated = false;  // Richardson tail correction applied
  std::size_t terms_used = 0;

  std::size_t length() const { return taps.size(); }
};

struct FoldOptions {
  double tol = 1e-10;
  std::size_t max_terms = 100000;
};

/// Bins whose base 1 -/+ e^{-2 pi i j / n} vanishes: {0} for Derivative,
/// {n/2} for Integral with even n, none otherwise.
std::vector<std::size_t> singular_bins(FilterKind kind, std::size_t n);

/// Vector with 1 on every unmasked bin and 0 on the masked ones.
ComplexVector masked_ones(FilterKind kind, std::size_t n);

SpectralSymbol build_symbol(FilterKind kind, Complex alpha, std::size_t n);

/// taps = idft(build_symbol(kind, alpha, n).bins). Defined for every complex alpha.
Filter1D make_filter_spectral(FilterKind kind, Complex alpha, std::size_t n);

/// Folds the binomial series of (1 -/+ 1)^alpha n-periodically:
///   tap_k = sum_p binom(alpha, k + p n) (-1)^{k + p n}   (Derivative)
///   tap_k = sum_p binom(alpha, k + p n)                  (Integral)
///
/// Summation stops after the first full period whose largest term is below
/// tol * max(1, max |tap|), or when max_terms is reached (budget_exhausted).
/// Unless the series terminated exactly (positive integer alpha), the
/// remaining tail is estimated by Richardson extrapolation over the partial
/// sums at P, P/2, P/4, ... periods, using the P^{-alpha-m} asymptotics of
/// the binomial coefficients.
///
/// Requires Re(alpha) > 0; throws PreconditionError("series diverges") otherwise.
Filter1D make_filter_folded(FilterKind kind, Complex alpha, std::size_t n, FoldOptions options = {});

const char* kind_tag(FilterKind kind);   // "D" / "I"
const char* route_tag(Route route);      // "spectral" / "folded"

}  // namespace cofilt
