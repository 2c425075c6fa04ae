#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cofilt/complex_core.hpp"
#include "cofilt/filter_gen.hpp"

namespace cofilt {

// q-dimensional block of complex taps, row-major (last index fastest), with
// the filtering reference point at floor(n_i / 2) on every axis.
struct KernelQ {
  std::vector<std::size_t> dims;
  ComplexVector taps;
  std::vector<std::size_t> reference;

  std::size_t rank() const { return dims.size(); }
  std::size_t size() const { return taps.size(); }
  std::size_t linear_index(std::span<const std::size_t> index) const;
  std::vector<std::size_t> coordinates(std::size_t linear) const;
};

std::vector<std::size_t> reference_point(std::span<const std::size_t> dims);

/// Grid positions (row-major linear indices) ordered by ascending Euclidean
/// distance to the reference point, ties by row-major order.
std::vector<std::size_t> placement_order(std::span<const std::size_t> dims);

/// Modulus-sorted placement: largest modulus at the reference point, then
/// outward. Equal moduli keep source order. Throws ContractViolation unless
/// prod(dims) == taps.size().
KernelQ place_hypercube(std::span<const Complex> taps, std::span<const std::size_t> dims);
KernelQ place_hypercube(const Filter1D& f, std::span<const std::size_t> dims);

/// 1-D kernel. Positive integer order m < n: cyclic shift moving the block
/// center floor((m+1)/2) to floor(n/2). Otherwise modulus-sorted placement.
KernelQ recenter_1d(const Filter1D& f);

/// Kernel with explicit row-major taps and the default reference point.
KernelQ make_kernel(std::vector<std::size_t> dims, ComplexVector taps);

}  // namespace cofilt
