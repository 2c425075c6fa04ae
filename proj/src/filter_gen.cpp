#include "cofilt/filter_gen.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "cofilt/errors.hpp"

namespace cofilt {

namespace {

bool contains(const std::vector<std::size_t>& v, std::size_t x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

// Solves A x = B column by column (A is m x m, B is m x r, both row-major)
// with partial pivoting. Small systems only.
void solve_in_place(std::vector<Complex>& a, std::vector<Complex>& b, std::size_t m, std::size_t r) {
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pivot = col;
    for (std::size_t row = col + 1; row < m; ++row) {
      if (std::abs(a[row * m + col]) > std::abs(a[pivot * m + col])) pivot = row;
    }
    if (pivot != col) {
      for (std::size_t j = 0; j < m; ++j) std::swap(a[col * m + j], a[pivot * m + j]);
      for (std::size_t j = 0; j < r; ++j) std::swap(b[col * r + j], b[pivot * r + j]);
    }
    const Complex diag = a[col * m + col];
    for (std::size_t row = col + 1; row < m; ++row) {
      const Complex f = a[row * m + col] / diag;
      if (f == Complex{}) continue;
      for (std::size_t j = col; j < m; ++j) a[row * m + j] -= f * a[col * m + j];
      for (std::size_t j = 0; j < r; ++j) b[row * r + j] -= f * b[col * r + j];
    }
  }
  for (std::size_t col = m; col-- > 0;) {
    for (std::size_t j = 0; j < r; ++j) {
      Complex acc = b[col * r + j];
      for (std::size_t k = col + 1; k < m; ++k) acc -= a[col * m + k] * b[k * r + j];
      b[col * r + j] = acc / a[col * m + col];
    }
  }
}

constexpr std::size_t kMaxExtrapolationNodes = 7;
constexpr std::size_t kMinNodePeriods = 8;

// Partial sums after p full periods behave like S - sum_m d_m p^{-alpha-m}.
// Even p only, so alternating residue classes (Integral, odd n) are sampled
// on a single smooth branch.
bool extrapolate_tail(const std::vector<Complex>& snapshots, std::size_t n, std::size_t periods,
                      Complex alpha, ComplexVector& taps) {
  std::vector<std::size_t> nodes;
  for (std::size_t i = 0; i < kMaxExtrapolationNodes; ++i) {
    std::size_t p = (periods >> i) & ~std::size_t{1};
    if (p < kMinNodePeriods) break;
    if (!nodes.empty() && nodes.back() == p) continue;
    nodes.push_back(p);
  }
  if (nodes.size() < 3) return false;
  std::reverse(nodes.begin(), nodes.end());

  const std::size_t m = nodes.size();
  std::vector<Complex> a(m * m);
  std::vector<Complex> b(m * n);
  const double base = static_cast<double>(nodes.front());
  for (std::size_t i = 0; i < m; ++i) {
    const double ratio = static_cast<double>(nodes[i]) / base;
    a[i * m] = 1.0;
    for (std::size_t j = 1; j < m; ++j) {
      a[i * m + j] = -std::exp(-(alpha + static_cast<double>(j - 1)) * std::log(ratio));
    }
    for (std::size_t r = 0; r < n; ++r) b[i * n + r] = snapshots[(nodes[i] - 1) * n + r];
  }
  solve_in_place(a, b, m, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!std::isfinite(b[r].real()) || !std::isfinite(b[r].imag())) return false;
  }
  for (std::size_t r = 0; r < n; ++r) taps[r] = b[r];
  return true;
}

}  // namespace

const char* kind_tag(FilterKind kind) { return kind == FilterKind::Derivative ? "D" : "I"; }

const char* route_tag(Route route) { return route == Route::Spectral ? "spectral" : "folded"; }

std::vector<std::size_t> singular_bins(FilterKind kind, std::size_t n) {
  if (kind == FilterKind::Derivative) return {0};
  if (n % 2 == 0) return {n / 2};
  return {};
}

ComplexVector masked_ones(FilterKind kind, std::size_t n) {
  ComplexVector ones(n, Complex{1.0, 0.0});
  for (std::size_t j : singular_bins(kind, n)) ones[j] = 0.0;
  return ones;
}

SpectralSymbol build_symbol(FilterKind kind, Complex alpha, std::size_t n) {
  if (n == 0) throw PreconditionError("build_symbol: n must be >= 1");
  SpectralSymbol s;
  s.kind = kind;
  s.order = alpha;
  s.masked_bins = singular_bins(kind, n);
  s.bins.assign(n, Complex{});
  const double sign = kind == FilterKind::Derivative ? -1.0 : 1.0;
  for (std::size_t j = 0; j < n; ++j) {
    if (contains(s.masked_bins, j)) continue;
    s.bins[j] = principal_power(1.0 + sign * unit_root(j, n), alpha);
  }
  return s;
}

Filter1D make_filter_spectral(FilterKind kind, Complex alpha, std::size_t n) {
  const SpectralSymbol symbol = build_symbol(kind, alpha, n);
  Filter1D f;
  f.kind = kind;
  f.order = alpha;
  f.route = Route::Spectral;
  f.taps = idft(symbol.bins);
  return f;
}

Filter1D make_filter_folded(FilterKind kind, Complex alpha, std::size_t n, FoldOptions options) {
  if (n == 0) throw PreconditionError("make_filter_folded: n must be >= 1");
  if (!(alpha.real() > 0.0)) throw PreconditionError("series diverges");
  if (!(options.tol > 0.0)) throw PreconditionError("make_filter_folded: tol must be positive");
  if (options.max_terms == 0) throw PreconditionError("make_filter_folded: max_terms must be positive");

  const std::size_t max_periods = std::max<std::size_t>(1, options.max_terms / n);
  const bool alternating = kind == FilterKind::Derivative;

  ComplexVector taps(n, Complex{});
  std::vector<Complex> snapshots;  // taps after each full period, flattened
  Complex coeff{1.0, 0.0};
  std::size_t h = 0;
  std::size_t periods = 0;
  bool terminated = false;
  bool converged = false;

  while (periods < max_periods && !terminated && !converged) {
    double period_max = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      const Complex term = (alternating && (h % 2 == 1)) ? -coeff : coeff;
      taps[r] += term;
      period_max = std::max(period_max, std::abs(term));
      coeff *= (alpha - static_cast<double>(h)) / static_cast<double>(h + 1);
      ++h;
      if (coeff == Complex{}) {
        terminated = true;
        break;
      }
    }
    ++periods;
    snapshots.insert(snapshots.end(), taps.begin(), taps.end());
    if (!terminated) {
      converged = period_max < options.tol * std::max(1.0, max_abs(taps));
    }
  }

  Filter1D f;
  f.kind = kind;
  f.order = alpha;
  f.route = Route::FoldedSeries;
  f.terms_used = h;
  f.budget_exhausted = !terminated && !converged;
  if (!terminated) {
    f.tail_extrapolated = extrapolate_tail(snapshots, n, periods, alpha, taps);
  }
  f.taps = std::move(taps);
  return f;
}

}  // namespace cofilt
