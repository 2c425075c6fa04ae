#include "cofilt/layout.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>

#include "cofilt/errors.hpp"

namespace cofilt {

namespace {

std::size_t product(std::span<const std::size_t> dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

bool positive_integer_order(Complex order, std::size_t& m) {
  if (order.imag() != 0.0) return false;
  const double re = order.real();
  if (!(re >= 1.0) || std::floor(re) != re || re > 1e15) return false;
  m = static_cast<std::size_t>(re);
  return true;
}

}  // namespace

std::size_t KernelQ::linear_index(std::span<const std::size_t> index) const {
  if (index.size() != dims.size()) throw ContractViolation("KernelQ: index rank mismatch");
  std::size_t lin = 0;
  for (std::size_t a = 0; a < dims.size(); ++a) {
    if (index[a] >= dims[a]) throw ContractViolation("KernelQ: index out of range");
    lin = lin * dims[a] + index[a];
  }
  return lin;
}

std::vector<std::size_t> KernelQ::coordinates(std::size_t linear) const {
  std::vector<std::size_t> idx(dims.size());
  for (std::size_t a = dims.size(); a-- > 0;) {
    idx[a] = linear % dims[a];
    linear /= dims[a];
  }
  return idx;
}

std::vector<std::size_t> reference_point(std::span<const std::size_t> dims) {
  std::vector<std::size_t> ref(dims.size());
  for (std::size_t a = 0; a < dims.size(); ++a) ref[a] = dims[a] / 2;
  return ref;
}

std::vector<std::size_t> placement_order(std::span<const std::size_t> dims) {
  const std::size_t total = product(dims);
  const auto ref = reference_point(dims);
  // Squared distances are exact integers, so the order is total and portable.
  std::vector<std::uint64_t> dist2(total);
  for (std::size_t lin = 0; lin < total; ++lin) {
    std::size_t rest = lin;
    std::uint64_t d = 0;
    for (std::size_t a = dims.size(); a-- > 0;) {
      const auto c = static_cast<std::int64_t>(rest % dims[a]);
      rest /= dims[a];
      const std::int64_t diff = c - static_cast<std::int64_t>(ref[a]);
      d += static_cast<std::uint64_t>(diff * diff);
    }
    dist2[lin] = d;
  }
  std::vector<std::size_t> order(total);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return dist2[a] < dist2[b]; });
  return order;
}

KernelQ place_hypercube(std::span<const Complex> taps, std::span<const std::size_t> dims) {
  if (dims.empty() || std::find(dims.begin(), dims.end(), 0) != dims.end()) {
    throw ContractViolation("place_hypercube: dims must be positive");
  }
  if (product(dims) != taps.size()) {
    throw ContractViolation("place_hypercube: prod(dims) must equal the filter length");
  }
  std::vector<double> modulus(taps.size());
  for (std::size_t i = 0; i < taps.size(); ++i) modulus[i] = std::abs(taps[i]);
  std::vector<std::size_t> source(taps.size());
  std::iota(source.begin(), source.end(), 0);
  std::stable_sort(source.begin(), source.end(),
                   [&](std::size_t a, std::size_t b) { return modulus[a] > modulus[b]; });

  const auto positions = placement_order(dims);
  KernelQ k;
  k.dims.assign(dims.begin(), dims.end());
  k.reference = reference_point(dims);
  k.taps.assign(taps.size(), Complex{});
  for (std::size_t i = 0; i < positions.size(); ++i) k.taps[positions[i]] = taps[source[i]];
  return k;
}

KernelQ place_hypercube(const Filter1D& f, std::span<const std::size_t> dims) {
  return place_hypercube(f.taps, dims);
}

KernelQ recenter_1d(const Filter1D& f) {
  const std::size_t n = f.taps.size();
  if (n == 0) throw ContractViolation("recenter_1d: empty filter");
  const std::vector<std::size_t> dims{n};

  const bool all_zero =
      std::all_of(f.taps.begin(), f.taps.end(), [](const Complex& c) { return c == Complex{}; });
  if (all_zero) return make_kernel(dims, f.taps);

  std::size_t m = 0;
  if (positive_integer_order(f.order, m) && m < n) {
    const std::size_t shift = (n / 2 + n - (m + 1) / 2) % n;
    ComplexVector out(n);
    for (std::size_t i = 0; i < n; ++i) out[(i + shift) % n] = f.taps[i];
    return make_kernel(dims, std::move(out));
  }
  return place_hypercube(f.taps, dims);
}

KernelQ make_kernel(std::vector<std::size_t> dims, ComplexVector taps) {
  if (dims.empty() || product(dims) != taps.size()) {
    throw ContractViolation("make_kernel: prod(dims) must equal the tap count");
  }
  KernelQ k;
  k.reference = reference_point(dims);
  k.dims = std::move(dims);
  k.taps = std::move(taps);
  return k;
}

}  // namespace cofilt
