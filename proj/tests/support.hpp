#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <random>
#include <span>
#include <vector>

#include "cofilt/complex_core.hpp"

namespace testing {

using cofilt::Complex;
using cofilt::ComplexVector;

inline ComplexVector random_vector(std::mt19937_64& rng, std::size_t n, double scale = 1.0) {
  std::normal_distribution<double> dist(0.0, scale);
  ComplexVector v(n);
  for (auto& x : v) x = {dist(rng), dist(rng)};
  return v;
}

inline Complex random_alpha(std::mt19937_64& rng, double lo = -3.0, double hi = 3.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  return {dist(rng), dist(rng)};
}

inline double max_diff(std::span<const Complex> a, std::span<const Complex> b) {
  double m = a.size() == b.size() ? 0.0 : INFINITY;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

// Inverse DFT in long double, written without the library's twiddle table.
inline ComplexVector reference_idft(std::span<const Complex> u) {
  using L = long double;
  const std::size_t n = u.size();
  const L two_pi = 2.0L * 3.141592653589793238462643383279502884L;
  ComplexVector out(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::complex<L> acc{};
    for (std::size_t j = 0; j < n; ++j) {
      const L angle = two_pi * static_cast<L>((j * k) % n) / static_cast<L>(n);
      acc += std::complex<L>(u[j].real(), u[j].imag()) * std::complex<L>(std::cos(angle), std::sin(angle));
    }
    acc /= static_cast<L>(n);
    out[k] = {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
  }
  return out;
}

// Spectral taps computed from scratch: (1 -/+ w^j)^alpha with exp/log in long double.
inline ComplexVector reference_taps(bool derivative, Complex alpha, std::size_t n) {
  using L = long double;
  const L two_pi = 2.0L * 3.141592653589793238462643383279502884L;
  ComplexVector bins(n);
  for (std::size_t j = 0; j < n; ++j) {
    const L angle = -two_pi * static_cast<L>(j) / static_cast<L>(n);
    std::complex<L> w(std::cos(angle), std::sin(angle));
    std::complex<L> base = derivative ? 1.0L - w : 1.0L + w;
    const bool singular = derivative ? j == 0 : 2 * j == n;
    if (singular) {
      bins[j] = 0.0;
      continue;
    }
    const std::complex<L> p = std::exp(std::complex<L>(alpha.real(), alpha.imag()) * std::log(base));
    bins[j] = {static_cast<double>(p.real()), static_cast<double>(p.imag())};
  }
  return reference_idft(bins);
}

}  // namespace testing
