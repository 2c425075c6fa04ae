#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cofilt/apply.hpp"
#include "cofilt/complex_core.hpp"
#include "cofilt/filter_gen.hpp"
#include "cofilt/layout.hpp"

namespace cofilt {

// Text formats use %.17g for sample values, so a dump read back is bit-exact.

/// Shortest round-trip text `<re>+<im>i` (or `<re>-<|im|>i`).
std::string format_alpha(Complex alpha);

/// Accepts `a`, `bi`, `i`, `a+bi`, `a-bi`, `a+-bi`, `a+i`. Throws FormatError.
Complex parse_alpha(std::string_view text);

FilterKind parse_kind(std::string_view text);
BoundaryMode parse_boundary(std::string_view text);

std::string format_number(double v);

/// `# kind=<D|I> alpha=<a> n=<n> route=<spectral|folded>` then `k,re,im` lines.
void write_filter_dump(std::ostream& out, const Filter1D& f);
Filter1D read_filter_dump(std::istream& in);

/// `# dims=<n1>x<n2> reference=<i>,<j>` then row-major `re,im` lines.
void write_kernel_dump(std::ostream& out, const KernelQ& k);

/// `t,re,im` lines with t = 1, 2, ...
void write_signal(std::ostream& out, const ComplexField& f);
/// Reads `t,re,im` (or `t,re`) rows in file order; `#` lines and a
/// non-numeric header line are skipped.
ComplexField read_signal(std::istream& in);

/// `t,re,im,angle,mod` lines.
void write_signal_planes(std::ostream& out, const DecomposedField& d);

/// `CFD1 <rows> <cols>\n` then row-major little-endian float64 (re, im) pairs.
/// 1-D fields are stored as a single row.
void write_cfd(std::ostream& out, const ComplexField& f);
ComplexField read_cfd(std::istream& in);

/// Min-max scaling of one plane onto [0, 255]; a flat plane maps to 0.
std::vector<std::uint8_t> scale_to_gray8(std::span<const double> plane);

}  // namespace cofilt
