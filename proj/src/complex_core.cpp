#include "cofilt/complex_core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cofilt/errors.hpp"

namespace cofilt {

Complex principal_power(Complex base, Complex exponent) {
  if (base == Complex{0.0, 0.0}) {
    if (exponent.real() > 0.0) return {0.0, 0.0};
    throw DomainError("singular power");
  }
  // arg in (-pi, pi]: -0 is read as +0.
  if (base.imag() == 0.0) base.imag(0.0);
  return std::exp(exponent * std::log(base));
}

Complex generalized_binomial(Complex alpha, std::size_t k) {
  Complex c{1.0, 0.0};
  for (std::size_t j = 0; j < k; ++j) {
    c *= (alpha - static_cast<double>(j)) / static_cast<double>(j + 1);
  }
  return c;
}

Complex unit_root(std::size_t m, std::size_t n) {
  m %= n;
  if (m == 0) return {1.0, 0.0};
  if (2 * m == n) return {-1.0, 0.0};
  if (4 * m == n) return {0.0, -1.0};
  if (4 * m == 3 * n) return {0.0, 1.0};
  if (2 * m > n) return std::conj(unit_root(n - m, n));
  const double theta = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n);
  return {std::cos(theta), -std::sin(theta)};
}

namespace {

ComplexVector twiddles(std::size_t n, bool inverse) {
  ComplexVector w(n);
  for (std::size_t m = 0; m < n; ++m) {
    w[m] = inverse ? std::conj(unit_root(m, n)) : unit_root(m, n);
  }
  return w;
}

ComplexVector direct_transform(std::span<const Complex> x, bool inverse) {
  const std::size_t n = x.size();
  ComplexVector out(n);
  if (n == 0) return out;
  const ComplexVector w = twiddles(n, inverse);
  for (std::size_t k = 0; k < n; ++k) {
    Complex acc{0.0, 0.0};
    std::size_t idx = 0;  // (k * j) mod n, advanced incrementally
    for (std::size_t j = 0; j < n; ++j) {
      acc += w[idx] * x[j];
      idx += k;
      if (idx >= n) idx -= n;
    }
    out[k] = acc;
  }
  if (inverse) {
    const double scale = 1.0 / static_cast<double>(n);
    for (auto& v : out) v *= scale;
  }
  return out;
}

}  // namespace

ComplexVector dft(std::span<const Complex> x) { return direct_transform(x, false); }

ComplexVector idft(std::span<const Complex> u) { return direct_transform(u, true); }

ComplexVector circular_convolve(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) {
    throw ContractViolation("circular_convolve: length mismatch");
  }
  const std::size_t n = a.size();
  ComplexVector c(n);
  for (std::size_t k = 0; k < n; ++k) {
    Complex acc{0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) {
      acc += a[j] * b[(k + n - j) % n];
    }
    c[k] = acc;
  }
  return c;
}

ComplexVector reversed(std::span<const Complex> x) { return ComplexVector(x.rbegin(), x.rend()); }

double max_abs(std::span<const Complex> x) {
  double m = 0.0;
  for (const auto& v : x) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace cofilt
