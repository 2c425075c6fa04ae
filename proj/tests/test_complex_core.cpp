#include <doctest.h>

#include "cofilt/complex_core.hpp"
#include "cofilt/errors.hpp"
#include "oracle_values.hpp"
#include "support.hpp"

using namespace cofilt;
using testing::max_diff;

TEST_CASE("principal_power on the principal branch") {
  CHECK(std::abs(principal_power(2.0, Complex{1, 1}) - oracle::kTwoPow1p1i) < 1e-14);
  CHECK(std::abs(principal_power(-1.0, 0.5) - Complex{0, 1}) < 1e-15);
  // Im(Log(-1)) = +pi, not -pi.
  CHECK(principal_power(Complex{-1.0, -0.0}, 0.5).imag() > 0);
  CHECK(principal_power(4.0, 0.5) == Complex{2.0, 0.0});
}

TEST_CASE("principal_power at a zero base") {
  CHECK(principal_power(0.0, Complex{0.5, 3}) == Complex{0, 0});
  CHECK_THROWS_AS(principal_power(0.0, Complex{0.0, 1}), DomainError);
  CHECK_THROWS_AS(principal_power(0.0, -1.0), DomainError);
}

TEST_CASE("generalized_binomial") {
  CHECK(generalized_binomial(5.0, 2) == Complex{10, 0});
  CHECK(generalized_binomial(3.0, 4) == Complex{0, 0});
  CHECK(generalized_binomial(Complex{1, 2}, 0) == Complex{1, 0});
  CHECK(std::abs(generalized_binomial(Complex{0.5, 0.5}, 5) - oracle::kBinomHalfHalf5) < 1e-16);
  CHECK(generalized_binomial(-1.5, 4).real() == doctest::Approx(oracle::kBinomM1p5_4).epsilon(1e-15));
}

TEST_CASE("unit_root is exact at quarter turns and conjugate-symmetric") {
  CHECK(unit_root(0, 8) == Complex{1, 0});
  CHECK(unit_root(2, 8) == Complex{0, -1});
  CHECK(unit_root(4, 8) == Complex{-1, 0});
  CHECK(unit_root(6, 8) == Complex{0, 1});
  for (std::size_t n = 2; n < 40; ++n) {
    for (std::size_t m = 1; m < n; ++m) CHECK(unit_root(n - m, n) == std::conj(unit_root(m, n)));
  }
}

TEST_CASE("dft of small vectors") {
  const ComplexVector ones{1, 1, 1, 1};
  const ComplexVector u = dft(ones);
  CHECK(u[0] == Complex{4, 0});
  for (std::size_t j = 1; j < 4; ++j) CHECK(std::abs(u[j]) < 1e-15);

  const ComplexVector delta{0, 1, 0, 0};
  const ComplexVector v = dft(delta);
  CHECK(max_diff(v, ComplexVector{1, Complex{0, -1}, -1, Complex{0, 1}}) < 1e-15);
  CHECK(dft(ComplexVector{}).empty());
}

TEST_CASE("idft agrees with a long double reference") {
  std::mt19937_64 rng(11);
  for (std::size_t n : {1u, 2u, 3u, 7u, 16u, 33u, 64u}) {
    const ComplexVector u = testing::random_vector(rng, n);
    CHECK(max_diff(idft(u), testing::reference_idft(u)) < 1e-14);
  }
}

TEST_CASE("property: round trip and Parseval") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> len(1, 64);
  for (int trial = 0; trial < 200; ++trial) {
    const ComplexVector x = testing::random_vector(rng, len(rng));
    const ComplexVector u = dft(x);
    CHECK(max_diff(idft(u), x) <= 1e-12);
    double ex = 0, eu = 0;
    for (const auto& v : x) ex += std::norm(v);
    for (const auto& v : u) eu += std::norm(v);
    CHECK(std::abs(ex - eu / static_cast<double>(x.size())) <= 1e-10 * std::max(1.0, ex));
  }
}

TEST_CASE("circular_convolve") {
  // (1+1)(1-1) vanishes in the length-2 cyclic ring.
  CHECK(circular_convolve(ComplexVector{1, 1}, ComplexVector{1, -1}) == ComplexVector{0, 0});
  CHECK(circular_convolve(ComplexVector{1, 2, 3}, ComplexVector{1, 0, 0}) == ComplexVector{1, 2, 3});
  CHECK(circular_convolve(ComplexVector{1, 2, 3}, ComplexVector{0, 1, 0}) == ComplexVector{3, 1, 2});
  CHECK_THROWS_AS(circular_convolve(ComplexVector{1, 2}, ComplexVector{1}), ContractViolation);
}

TEST_CASE("property: convolution theorem") {
  std::mt19937_64 rng(5);
  for (std::size_t n : {1u, 4u, 9u, 20u}) {
    const ComplexVector a = testing::random_vector(rng, n), b = testing::random_vector(rng, n);
    const ComplexVector ua = dft(a), ub = dft(b);
    ComplexVector prod(n);
    for (std::size_t j = 0; j < n; ++j) prod[j] = ua[j] * ub[j];
    CHECK(max_diff(circular_convolve(a, b), idft(prod)) < 1e-12);
  }
}

TEST_CASE("reversed and max_abs") {
  CHECK(reversed(ComplexVector{1, 2, 3}) == ComplexVector{3, 2, 1});
  CHECK(max_abs(ComplexVector{Complex{3, 4}, -1}) == 5.0);
  CHECK(max_abs(ComplexVector{}) == 0.0);
}
