#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace cofilt {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// exp(exponent * Log(base)) on the principal branch, Im(Log) in (-pi, pi].
/// A zero base yields exactly 0 when Re(exponent) > 0 and throws
/// DomainError("singular power") otherwise.
Complex principal_power(Complex base, Complex exponent);

/// (alpha choose k) by the forward recurrence C_{k+1} = C_k (alpha - k) / (k + 1).
Complex generalized_binomial(Complex alpha, std::size_t k);

/// exp(-2 pi i m / n). Symmetric in m <-> n - m up to conjugation, and exact
/// at multiples of a quarter turn.
Complex unit_root(std::size_t m, std::size_t n);

/// u_k = sum_j exp(-2 pi i k j / n) x_j.
ComplexVector dft(std::span<const Complex> x);

/// x_k = (1/n) sum_j exp(+2 pi i k j / n) u_j, so idft(dft(x)) == x.
ComplexVector idft(std::span<const Complex> u);

/// c_k = sum_j a_j b_{(k - j) mod n}. Throws ContractViolation on length mismatch.
ComplexVector circular_convolve(std::span<const Complex> a, std::span<const Complex> b);

ComplexVector reversed(std::span<const Complex> x);

double max_abs(std::span<const Complex> x);

}  // namespace cofilt
