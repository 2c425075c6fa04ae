#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cofilt/complex_core.hpp"
#include "cofilt/layout.hpp"

namespace cofilt {

enum class BoundaryMode { Replicate, Zero, Circular };

// 1-D signal ({n}) or row-major image ({rows, cols}).
struct ComplexField {
  std::vector<std::size_t> dims;
  ComplexVector samples;

  std::size_t rank() const { return dims.size(); }
  std::size_t rows() const { return dims.size() == 2 ? dims[0] : 1; }
  std::size_t cols() const { return dims.empty() ? 0 : dims.back(); }

  static ComplexField signal(ComplexVector samples);
  static ComplexField image(std::size_t rows, std::size_t cols, ComplexVector samples);
};

// Real, imaginary, phase angle in (-pi, pi] and modulus planes.
struct DecomposedField {
  std::vector<std::size_t> dims;
  std::vector<double> re;
  std::vector<double> im;
  std::vector<double> angle;
  std::vector<double> modulus;
};

/// X(t) = sin(2 pi t / 700) + 0.7 sin(6 pi t / 700) + 0.4 sin(12 pi t / 700),
/// t = 1..1000 stored at index t - 1.
ComplexField synth_signal();

/// y[t] = sum_s k[s] x[t + s - ref]; correlation anchored at the reference
/// point, no kernel flip.
ComplexField convolve_1d(const ComplexField& x, const KernelQ& k, BoundaryMode boundary);

/// Two-dimensional analogue of convolve_1d. Rows are split across worker
/// threads; the result does not depend on the thread count.
ComplexField convolve_2d(const ComplexField& img, const KernelQ& k, BoundaryMode boundary);

/// Dispatches on the field rank.
ComplexField convolve(const ComplexField& x, const KernelQ& k, BoundaryMode boundary);

/// Angle of an exact zero (either sign) is 0; a zero imaginary part is read as +0.
DecomposedField decompose(const ComplexField& f);

/// ((x^2 + y^2 - 2 s^2) / s^4) G_s(x, y) on the centered size x size grid,
/// mean-subtracted so the taps sum to zero.
KernelQ log_kernel(std::size_t size, double sigma);
/// Normalized Gaussian, taps sum to one.
KernelQ gaussian_kernel(std::size_t size, double sigma);

// One-dimensional baselines: second derivative of a Gaussian (mean-subtracted)
// and a normalized Gaussian.
KernelQ log_kernel_1d(std::size_t size, double sigma);
KernelQ gaussian_kernel_1d(std::size_t size, double sigma);

double pearson(std::span<const double> a, std::span<const double> b);

/// COFILT_THREADS, 0 or unset meaning hardware concurrency.
unsigned worker_count();

}  // namespace cofilt
