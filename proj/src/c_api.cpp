#include "cofilt/cofilt.h"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <iostream>
#include <new>
#include <string>

#include "cofilt/apply.hpp"
#include "cofilt/errors.hpp"
#include "cofilt/filter_gen.hpp"
#include "cofilt/formats.hpp"
#include "cofilt/image_io.hpp"
#include "cofilt/layout.hpp"
#include "cofilt/theorem_suite.hpp"

struct cofilt_filter {
  cofilt::Filter1D value;
};

struct cofilt_kernel {
  cofilt::KernelQ value;
};

struct cofilt_field {
  cofilt::ComplexField value;
};

namespace {

using namespace cofilt;

thread_local std::string g_last_error;

struct BufferTooSmall : std::runtime_error {
  BufferTooSmall() : std::runtime_error("buffer too small") {}
};

cofilt_status fail(cofilt_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <typename Fn>
cofilt_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return COFILT_OK;
  } catch (const BufferTooSmall& e) {
    return fail(COFILT_ERR_BUFFER_TOO_SMALL, e.what());
  } catch (const DomainError& e) {
    return fail(COFILT_ERR_DOMAIN, e.what());
  } catch (const PreconditionError& e) {
    return fail(COFILT_ERR_PRECONDITION, e.what());
  } catch (const ContractViolation& e) {
    return fail(COFILT_ERR_INVALID_ARGUMENT, e.what());
  } catch (const IoError& e) {
    return fail(COFILT_ERR_IO, e.what());
  } catch (const FormatError& e) {
    return fail(COFILT_ERR_FORMAT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(COFILT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(COFILT_ERR_INTERNAL, e.what());
  }
}

struct NullArgument : ContractViolation {
  NullArgument() : ContractViolation("null argument") {}
};

template <typename... Ptrs>
void require(const Ptrs*... ptrs) {
  if (((ptrs == nullptr) || ...)) throw NullArgument();
}

Complex to_cpp(cofilt_complex c) { return {c.re, c.im}; }
cofilt_complex to_c(Complex c) { return {c.real(), c.imag()}; }

FilterKind to_kind(cofilt_kind k) {
  switch (k) {
    case COFILT_DERIVATIVE:
      return FilterKind::Derivative;
    case COFILT_INTEGRAL:
      return FilterKind::Integral;
  }
  throw ContractViolation("unknown filter kind");
}

BoundaryMode to_boundary(cofilt_boundary b) {
  switch (b) {
    case COFILT_BOUNDARY_REPLICATE:
      return BoundaryMode::Replicate;
    case COFILT_BOUNDARY_ZERO:
      return BoundaryMode::Zero;
    case COFILT_BOUNDARY_CIRCULAR:
      return BoundaryMode::Circular;
  }
  throw ContractViolation("unknown boundary mode");
}

void copy_out(std::span<const Complex> src, cofilt_complex* buf, std::size_t cap) {
  if (cap < src.size()) throw BufferTooSmall();
  for (std::size_t i = 0; i < src.size(); ++i) buf[i] = to_c(src[i]);
}

template <typename T>
void copy_sizes(const std::vector<T>& src, std::size_t* buf, std::size_t cap) {
  if (cap < src.size()) throw BufferTooSmall();
  std::copy(src.begin(), src.end(), buf);
}

template <typename Writer>
void write_text(const char* path, Writer&& writer) {
  if (std::strcmp(path, "-") == 0) {
    writer(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(std::string("cannot write '") + path + "'");
  writer(out);
  out.flush();
  if (!out) throw IoError(std::string("write failed for '") + path + "'");
}

std::ifstream open_in(const char* path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(std::string("cannot open '") + path + "'");
  return in;
}

void fill_report(const VerificationReport& r, cofilt_report* out) {
  std::memset(out, 0, sizeof *out);
  std::snprintf(out->check_name, sizeof out->check_name, "%s", r.check_name.c_str());
  std::snprintf(out->kind, sizeof out->kind, "%s", r.kind.c_str());
  out->alpha = to_c(r.alpha);
  out->n = r.n;
  out->tolerance = r.tolerance;
  out->residual = r.residual;
  out->passed = r.passed ? 1 : 0;
  std::snprintf(out->detail, sizeof out->detail, "%s", r.detail.c_str());
  std::snprintf(out->line, sizeof out->line, "%s", format_report_line(r).c_str());
}

}  // namespace

extern "C" {

const char* cofilt_version(void) { return "1.0.0"; }

const char* cofilt_last_error(void) { return g_last_error.c_str(); }

cofilt_status cofilt_principal_power(cofilt_complex base, cofilt_complex exponent, cofilt_complex* out) {
  return guarded([&] {
    require(out);
    *out = to_c(principal_power(to_cpp(base), to_cpp(exponent)));
  });
}

cofilt_status cofilt_generalized_binomial(cofilt_complex alpha, size_t k, cofilt_complex* out) {
  return guarded([&] {
    require(out);
    *out = to_c(generalized_binomial(to_cpp(alpha), k));
  });
}

cofilt_status cofilt_parse_alpha(const char* text, cofilt_complex* out) {
  return guarded([&] {
    require(text, out);
    *out = to_c(parse_alpha(text));
  });
}

cofilt_status cofilt_format_alpha(cofilt_complex alpha, char* buf, size_t cap, size_t* needed) {
  const std::string s = format_alpha(to_cpp(alpha));
  if (needed) *needed = s.size();
  if (buf == nullptr || cap <= s.size()) {
    return fail(COFILT_ERR_BUFFER_TOO_SMALL, "buffer too small");
  }
  std::memcpy(buf, s.c_str(), s.size() + 1);
  g_last_error.clear();
  return COFILT_OK;
}

cofilt_status cofilt_parse_kind(const char* text, cofilt_kind* out) {
  return guarded([&] {
    require(text, out);
    *out = parse_kind(text) == FilterKind::Derivative ? COFILT_DERIVATIVE : COFILT_INTEGRAL;
  });
}

cofilt_status cofilt_parse_boundary(const char* text, cofilt_boundary* out) {
  return guarded([&] {
    require(text, out);
    switch (parse_boundary(text)) {
      case BoundaryMode::Replicate:
        *out = COFILT_BOUNDARY_REPLICATE;
        break;
      case BoundaryMode::Zero:
        *out = COFILT_BOUNDARY_ZERO;
        break;
      case BoundaryMode::Circular:
        *out = COFILT_BOUNDARY_CIRCULAR;
        break;
    }
  });
}

// ---- filters ----

cofilt_status cofilt_filter_spectral(cofilt_kind kind, cofilt_complex alpha, size_t n, cofilt_filter** out) {
  return guarded([&] {
    require(out);
    *out = new cofilt_filter{make_filter_spectral(to_kind(kind), to_cpp(alpha), n)};
  });
}

cofilt_status cofilt_filter_folded(cofilt_kind kind, cofilt_complex alpha, size_t n, double tol, size_t max_terms,
                                   cofilt_filter** out) {
  return guarded([&] {
    require(out);
    *out = new cofilt_filter{make_filter_folded(to_kind(kind), to_cpp(alpha), n, FoldOptions{tol, max_terms})};
  });
}

cofilt_status cofilt_filter_read(const char* path, cofilt_filter** out) {
  return guarded([&] {
    require(path, out);
    auto in = open_in(path);
    *out = new cofilt_filter{read_filter_dump(in)};
  });
}

void cofilt_filter_destroy(cofilt_filter* f) { delete f; }

size_t cofilt_filter_length(const cofilt_filter* f) { return f ? f->value.taps.size() : 0; }

cofilt_status cofilt_filter_taps(const cofilt_filter* f, cofilt_complex* buf, size_t cap) {
  return guarded([&] {
    require(f, buf);
    copy_out(f->value.taps, buf, cap);
  });
}

cofilt_status cofilt_filter_info(const cofilt_filter* f, cofilt_kind* kind, cofilt_complex* alpha,
                                 cofilt_route* route) {
  return guarded([&] {
    require(f);
    if (kind) *kind = f->value.kind == FilterKind::Derivative ? COFILT_DERIVATIVE : COFILT_INTEGRAL;
    if (alpha) *alpha = to_c(f->value.order);
    if (route) *route = f->value.route == Route::Spectral ? COFILT_ROUTE_SPECTRAL : COFILT_ROUTE_FOLDED;
  });
}

int cofilt_filter_budget_exhausted(const cofilt_filter* f) { return f && f->value.budget_exhausted ? 1 : 0; }

cofilt_status cofilt_filter_write(const cofilt_filter* f, const char* path) {
  return guarded([&] {
    require(f, path);
    write_text(path, [&](std::ostream& os) { write_filter_dump(os, f->value); });
  });
}

// ---- kernels ----

cofilt_status cofilt_kernel_recenter(const cofilt_filter* f, cofilt_kernel** out) {
  return guarded([&] {
    require(f, out);
    *out = new cofilt_kernel{recenter_1d(f->value)};
  });
}

cofilt_status cofilt_kernel_place(const cofilt_filter* f, const size_t* dims, size_t rank, cofilt_kernel** out) {
  return guarded([&] {
    require(f, dims, out);
    *out = new cofilt_kernel{place_hypercube(f->value, std::span<const std::size_t>(dims, rank))};
  });
}

cofilt_status cofilt_kernel_log(size_t size, double sigma, size_t rank, cofilt_kernel** out) {
  return guarded([&] {
    require(out);
    if (rank != 1 && rank != 2) throw ContractViolation("kernel rank must be 1 or 2");
    *out = new cofilt_kernel{rank == 1 ? log_kernel_1d(size, sigma) : log_kernel(size, sigma)};
  });
}

cofilt_status cofilt_kernel_gaussian(size_t size, double sigma, size_t rank, cofilt_kernel** out) {
  return guarded([&] {
    require(out);
    if (rank != 1 && rank != 2) throw ContractViolation("kernel rank must be 1 or 2");
    *out = new cofilt_kernel{rank == 1 ? gaussian_kernel_1d(size, sigma) : gaussian_kernel(size, sigma)};
  });
}

void cofilt_kernel_destroy(cofilt_kernel* k) { delete k; }

size_t cofilt_kernel_rank(const cofilt_kernel* k) { return k ? k->value.rank() : 0; }

cofilt_status cofilt_kernel_dims(const cofilt_kernel* k, size_t* dims, size_t cap) {
  return guarded([&] {
    require(k, dims);
    copy_sizes(k->value.dims, dims, cap);
  });
}

cofilt_status cofilt_kernel_reference(const cofilt_kernel* k, size_t* ref, size_t cap) {
  return guarded([&] {
    require(k, ref);
    copy_sizes(k->value.reference, ref, cap);
  });
}

size_t cofilt_kernel_size(const cofilt_kernel* k) { return k ? k->value.size() : 0; }

cofilt_status cofilt_kernel_taps(const cofilt_kernel* k, cofilt_complex* buf, size_t cap) {
  return guarded([&] {
    require(k, buf);
    copy_out(k->value.taps, buf, cap);
  });
}

cofilt_status cofilt_kernel_write(const cofilt_kernel* k, const char* path) {
  return guarded([&] {
    require(k, path);
    write_text(path, [&](std::ostream& os) { write_kernel_dump(os, k->value); });
  });
}

// ---- fields ----

cofilt_status cofilt_field_synth(cofilt_field** out) {
  return guarded([&] {
    require(out);
    *out = new cofilt_field{synth_signal()};
  });
}

cofilt_status cofilt_field_create(const size_t* dims, size_t rank, const cofilt_complex* samples,
                                  cofilt_field** out) {
  return guarded([&] {
    require(dims, samples, out);
    if (rank != 1 && rank != 2) throw ContractViolation("field rank must be 1 or 2");
    const std::size_t count = rank == 1 ? dims[0] : dims[0] * dims[1];
    if (count == 0) throw ContractViolation("field must not be empty");
    ComplexVector v(count);
    for (std::size_t i = 0; i < count; ++i) v[i] = to_cpp(samples[i]);
    *out = new cofilt_field{rank == 1 ? ComplexField::signal(std::move(v))
                                      : ComplexField::image(dims[0], dims[1], std::move(v))};
  });
}

cofilt_status cofilt_field_read_image(const char* path, cofilt_field** out) {
  return guarded([&] {
    require(path, out);
    *out = new cofilt_field{to_field(read_gray_image(path))};
  });
}

cofilt_status cofilt_field_read_signal(const char* path, cofilt_field** out) {
  return guarded([&] {
    require(path, out);
    auto in = open_in(path);
    *out = new cofilt_field{read_signal(in)};
  });
}

cofilt_status cofilt_field_read_cfd(const char* path, cofilt_field** out) {
  return guarded([&] {
    require(path, out);
    auto in = open_in(path);
    *out = new cofilt_field{read_cfd(in)};
  });
}

void cofilt_field_destroy(cofilt_field* f) { delete f; }

size_t cofilt_field_rank(const cofilt_field* f) { return f ? f->value.rank() : 0; }

cofilt_status cofilt_field_dims(const cofilt_field* f, size_t* dims, size_t cap) {
  return guarded([&] {
    require(f, dims);
    copy_sizes(f->value.dims, dims, cap);
  });
}

size_t cofilt_field_size(const cofilt_field* f) { return f ? f->value.samples.size() : 0; }

cofilt_status cofilt_field_samples(const cofilt_field* f, cofilt_complex* buf, size_t cap) {
  return guarded([&] {
    require(f, buf);
    copy_out(f->value.samples, buf, cap);
  });
}

cofilt_status cofilt_field_decompose(const cofilt_field* f, double* re, double* im, double* angle,
                                     double* modulus) {
  return guarded([&] {
    require(f);
    const DecomposedField d = decompose(f->value);
    if (re) std::copy(d.re.begin(), d.re.end(), re);
    if (im) std::copy(d.im.begin(), d.im.end(), im);
    if (angle) std::copy(d.angle.begin(), d.angle.end(), angle);
    if (modulus) std::copy(d.modulus.begin(), d.modulus.end(), modulus);
  });
}

cofilt_status cofilt_field_convolve(const cofilt_field* x, const cofilt_kernel* k, cofilt_boundary boundary,
                                    cofilt_field** out) {
  return guarded([&] {
    require(x, k, out);
    if (x->value.rank() != k->value.rank()) throw ContractViolation("kernel rank must match field rank");
    *out = new cofilt_field{convolve(x->value, k->value, to_boundary(boundary))};
  });
}

cofilt_status cofilt_field_write_signal(const cofilt_field* f, const char* path) {
  return guarded([&] {
    require(f, path);
    write_text(path, [&](std::ostream& os) { write_signal(os, f->value); });
  });
}

cofilt_status cofilt_field_write_signal_planes(const cofilt_field* f, const char* path) {
  return guarded([&] {
    require(f, path);
    const DecomposedField d = decompose(f->value);
    write_text(path, [&](std::ostream& os) { write_signal_planes(os, d); });
  });
}

cofilt_status cofilt_field_write_cfd(const cofilt_field* f, const char* path) {
  return guarded([&] {
    require(f, path);
    write_text(path, [&](std::ostream& os) { write_cfd(os, f->value); });
  });
}

cofilt_status cofilt_field_write_planes(const cofilt_field* f, const char* prefix, int planes) {
  return guarded([&] {
    require(f, prefix);
    if (f->value.rank() != 2) throw ContractViolation("plane images need a 2-D field");
    const DecomposedField d = decompose(f->value);
    const std::pair<int, std::pair<const char*, const std::vector<double>*>> all[] = {
        {COFILT_PLANE_RE, {"_re", &d.re}},
        {COFILT_PLANE_IM, {"_im", &d.im}},
        {COFILT_PLANE_ANGLE, {"_angle", &d.angle}},
        {COFILT_PLANE_MOD, {"_mod", &d.modulus}},
    };
    for (const auto& [bit, entry] : all) {
      if (!(planes & bit)) continue;
      Gray8Image img{f->value.rows(), f->value.cols(), scale_to_gray8(*entry.second)};
      write_png(std::string(prefix) + entry.first + ".png", img);
    }
  });
}

cofilt_status cofilt_pearson(const double* a, const double* b, size_t n, double* out) {
  return guarded([&] {
    require(a, b, out);
    *out = pearson(std::span<const double>(a, n), std::span<const double>(b, n));
  });
}

// ---- verification ----

cofilt_status cofilt_check_realness(double alpha, size_t n, cofilt_report* out) {
  return guarded([&] {
    require(out);
    fill_report(check_realness(alpha, n), out);
  });
}

cofilt_status cofilt_check_integer_reduction(unsigned m, size_t n, cofilt_report* out) {
  return guarded([&] {
    require(out);
    fill_report(check_integer_reduction(m, n), out);
  });
}

cofilt_status cofilt_check_sums(cofilt_complex alpha, size_t n, cofilt_report* out) {
  return guarded([&] {
    require(out);
    fill_report(check_sums(to_cpp(alpha), n), out);
  });
}

cofilt_status cofilt_check_convolution_inverse(cofilt_kind kind, cofilt_complex alpha, size_t n,
                                               cofilt_report* out) {
  return guarded([&] {
    require(out);
    fill_report(check_convolution_inverse(to_kind(kind), to_cpp(alpha), n), out);
  });
}

cofilt_status cofilt_check_nullspace(cofilt_complex alpha, size_t n, cofilt_report* out) {
  return guarded([&] {
    require(out);
    fill_report(check_nullspace(to_cpp(alpha), n), out);
  });
}

cofilt_status cofilt_check_integral_constraints(cofilt_complex alpha, size_t n, cofilt_report* out) {
  return guarded([&] {
    require(out);
    fill_report(check_integral_constraints(to_cpp(alpha), n), out);
  });
}

cofilt_status cofilt_verify_default(cofilt_report* buf, size_t cap, size_t* count) {
  return guarded([&] {
    require(count);
    const auto reports = run_default_grid();
    *count = reports.size();
    if (buf == nullptr) return;
    if (cap < reports.size()) throw BufferTooSmall();
    for (std::size_t i = 0; i < reports.size(); ++i) fill_report(reports[i], &buf[i]);
  });
}

}  // extern "C"
