#include <doctest.h>

#include "cofilt/errors.hpp"
#include "cofilt/filter_gen.hpp"
#include "oracle_values.hpp"
#include "support.hpp"

using namespace cofilt;
using testing::max_diff;

TEST_CASE("singular bins") {
  CHECK(singular_bins(FilterKind::Derivative, 5) == std::vector<std::size_t>{0});
  CHECK(singular_bins(FilterKind::Integral, 8) == std::vector<std::size_t>{4});
  CHECK(singular_bins(FilterKind::Integral, 5).empty());
  CHECK(masked_ones(FilterKind::Derivative, 3) == ComplexVector{0, 1, 1});
  CHECK(masked_ones(FilterKind::Integral, 4) == ComplexVector{1, 1, 0, 1});
}

TEST_CASE("build_symbol") {
  const auto d = build_symbol(FilterKind::Derivative, 1.0, 4);
  CHECK(max_diff(d.bins, ComplexVector{0, Complex{1, 1}, 2, Complex{1, -1}}) < 1e-15);
  CHECK(d.masked_bins == std::vector<std::size_t>{0});

  const auto i8 = build_symbol(FilterKind::Integral, 2.0, 8);
  CHECK(i8.bins[4] == Complex{0, 0});

  const auto i5 = build_symbol(FilterKind::Integral, -0.5, 5);
  CHECK(i5.masked_bins.empty());
  for (const auto& b : i5.bins) CHECK(std::abs(b) > 0.1);
}

TEST_CASE("conjugate symmetry of the symbol for real order") {
  for (double a : {-1.5, -0.3, 0.5, 1.0, 1.7, 3.0}) {
    for (std::size_t n = 4; n <= 16; ++n) {
      for (auto kind : {FilterKind::Derivative, FilterKind::Integral}) {
        const auto s = build_symbol(kind, a, n);
        for (std::size_t j = 1; j < n; ++j) CHECK(std::abs(s.bins[j] - std::conj(s.bins[n - j])) < 1e-13);
      }
    }
  }
}

TEST_CASE("make_filter_spectral small cases") {
  CHECK(max_diff(make_filter_spectral(FilterKind::Derivative, 1.0, 4).taps, ComplexVector{1, -1, 0, 0}) < 1e-15);
  CHECK(max_diff(make_filter_spectral(FilterKind::Integral, 2.0, 8).taps, ComplexVector{1, 2, 1, 0, 0, 0, 0, 0}) <
        1e-15);
  CHECK(max_diff(make_filter_spectral(FilterKind::Derivative, 0.0, 5).taps,
                 ComplexVector{0.8, -0.2, -0.2, -0.2, -0.2}) < 1e-15);
  const auto f = make_filter_spectral(FilterKind::Integral, Complex{0, 2}, 1);
  CHECK(f.taps.size() == 1);
  CHECK(f.route == Route::Spectral);
}

TEST_CASE("make_filter_spectral against mpmath values") {
  auto close = [](const ComplexVector& got, const auto& want) {
    double m = 0;
    for (std::size_t k = 0; k < got.size(); ++k) m = std::max(m, std::abs(got[k] - want[k]));
    return m;
  };
  CHECK(close(make_filter_spectral(FilterKind::Derivative, Complex{1, 1}, 7).taps, oracle::kD_1p1i_7) < 1e-14);
  CHECK(close(make_filter_spectral(FilterKind::Integral, Complex{1, 1}, 7).taps, oracle::kI_1p1i_7) < 1e-14);
  CHECK(close(make_filter_spectral(FilterKind::Derivative, -0.5, 8).taps, oracle::kD_m0p5_8) < 1e-14);
  CHECK(close(make_filter_spectral(FilterKind::Integral, Complex{0.5, -1}, 6).taps, oracle::kI_0p5m1i_6) < 1e-14);
}

TEST_CASE("property: spectral taps match an independent long double construction") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const Complex alpha = testing::random_alpha(rng);
    const std::size_t n = 1 + rng() % 24;
    const bool d = trial % 2 == 0;
    const auto f = make_filter_spectral(d ? FilterKind::Derivative : FilterKind::Integral, alpha, n);
    const auto want = testing::reference_taps(d, alpha, n);
    CHECK(max_diff(f.taps, want) <= 1e-12 * std::max(1.0, max_abs(want)));
  }
}

TEST_CASE("integer orders reduce to binomial rows") {
  const ComplexVector d3{1, -3, 3, -1, 0, 0, 0, 0};
  const ComplexVector i3{1, 3, 3, 1, 0, 0, 0, 0};
  CHECK(max_diff(make_filter_spectral(FilterKind::Derivative, 3.0, 8).taps, d3) < 1e-10);
  CHECK(max_diff(make_filter_spectral(FilterKind::Integral, 3.0, 8).taps, i3) < 1e-10);
}

TEST_CASE("tap sums") {
  for (Complex a : {Complex{1}, Complex{0.5}, Complex{1, 1}, Complex{-0.5, 2}}) {
    for (std::size_t n : {5u, 7u, 9u}) {
      Complex sd{}, si{};
      for (auto t : make_filter_spectral(FilterKind::Derivative, a, n).taps) sd += t;
      for (auto t : make_filter_spectral(FilterKind::Integral, a, n).taps) si += t;
      const Complex two_a = principal_power(2.0, a);
      CHECK(std::abs(sd) <= 1e-10);
      CHECK(std::abs(si - two_a) <= 1e-10 * std::abs(two_a));
    }
  }
}

TEST_CASE("folded route terminates for positive integer order") {
  const auto d = make_filter_folded(FilterKind::Derivative, 2.0, 8, {1e-12, 100000});
  CHECK(d.taps == ComplexVector{1, -2, 1, 0, 0, 0, 0, 0});
  CHECK_FALSE(d.budget_exhausted);
  CHECK_FALSE(d.tail_extrapolated);
  CHECK(d.route == Route::FoldedSeries);

  const auto i = make_filter_folded(FilterKind::Integral, 10.0, 8, {1e-12, 100000});
  const ComplexVector want{46, 20, 46, 120, 210, 252, 210, 120};
  CHECK(i.taps == want);
}

TEST_CASE("folded route agrees with the spectral route") {
  for (Complex a : {Complex{0.5}, Complex{1.5}, Complex{0.5, 0.5}, Complex{2, 1}, Complex{0.2, -1}}) {
    for (std::size_t n : {5u, 8u}) {
      for (auto kind : {FilterKind::Derivative, FilterKind::Integral}) {
        const auto folded = make_filter_folded(kind, a, n);
        const auto spectral = make_filter_spectral(kind, a, n);
        CHECK(max_diff(folded.taps, spectral.taps) < 1e-9);
      }
    }
  }
}

TEST_CASE("folded route refuses Re(alpha) <= 0") {
  CHECK_THROWS_AS(make_filter_folded(FilterKind::Derivative, -0.5, 8), PreconditionError);
  CHECK_THROWS_AS(make_filter_folded(FilterKind::Integral, Complex{0, 1}, 8), PreconditionError);
  CHECK_THROWS_WITH(make_filter_folded(FilterKind::Integral, 0.0, 8), "series diverges");
}

TEST_CASE("folded route flags an exhausted budget") {
  const auto f = make_filter_folded(FilterKind::Derivative, 0.5, 8, {1e-14, 64});
  CHECK(f.budget_exhausted);
  CHECK(f.terms_used <= 64);
  const auto g = make_filter_folded(FilterKind::Derivative, 3.0, 8, {1e-14, 64});
  CHECK_FALSE(g.budget_exhausted);
}

TEST_CASE("tags") {
  CHECK(std::string(kind_tag(FilterKind::Derivative)) == "D");
  CHECK(std::string(kind_tag(FilterKind::Integral)) == "I");
  CHECK(std::string(route_tag(Route::Spectral)) == "spectral");
  CHECK(std::string(route_tag(Route::FoldedSeries)) == "folded");
}
