#include "cofilt/apply.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <numeric>
#include <string>
#include <thread>

#include "cofilt/errors.hpp"

namespace cofilt {

namespace {

// Maps a possibly out-of-range index onto [0, n); returns false for a zero
// sample.
bool resolve(std::ptrdiff_t i, std::size_t n, BoundaryMode mode, std::size_t& out) {
  const auto sn = static_cast<std::ptrdiff_t>(n);
  if (i >= 0 && i < sn) {
    out = static_cast<std::size_t>(i);
    return true;
  }
  switch (mode) {
    case BoundaryMode::Zero:
      return false;
    case BoundaryMode::Replicate:
      out = i < 0 ? 0 : n - 1;
      return true;
    case BoundaryMode::Circular:
      out = static_cast<std::size_t>(((i % sn) + sn) % sn);
      return true;
  }
  return false;
}

template <typename Fn>
void parallel_for(std::size_t count, Fn&& body) {
  const std::size_t workers = std::min<std::size_t>(worker_count(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

void require_odd(std::size_t size, const char* who) {
  if (size == 0 || size % 2 == 0) throw PreconditionError(std::string(who) + ": size must be odd");
}

void require_sigma(double sigma, const char* who) {
  if (!(sigma > 0.0)) throw PreconditionError(std::string(who) + ": sigma must be positive");
}

KernelQ real_kernel(std::vector<std::size_t> dims, const std::vector<double>& taps) {
  ComplexVector c(taps.begin(), taps.end());
  return make_kernel(std::move(dims), std::move(c));
}

}  // namespace

ComplexField ComplexField::signal(ComplexVector samples) {
  ComplexField f;
  f.dims = {samples.size()};
  f.samples = std::move(samples);
  return f;
}

ComplexField ComplexField::image(std::size_t rows, std::size_t cols, ComplexVector samples) {
  if (rows * cols != samples.size()) throw ContractViolation("ComplexField: sample count mismatch");
  ComplexField f;
  f.dims = {rows, cols};
  f.samples = std::move(samples);
  return f;
}

unsigned worker_count() {
  unsigned n = 0;
  if (const char* env = std::getenv("COFILT_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) n = static_cast<unsigned>(v);
  }
  if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
  return n;
}

ComplexField synth_signal() {
  ComplexVector x(1000);
  const double pi = std::numbers::pi;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double t = static_cast<double>(i + 1);
    x[i] = std::sin(2 * pi * t / 700) + 0.7 * std::sin(6 * pi * t / 700) + 0.4 * std::sin(12 * pi * t / 700);
  }
  return ComplexField::signal(std::move(x));
}

ComplexField convolve_1d(const ComplexField& x, const KernelQ& k, BoundaryMode boundary) {
  if (x.rank() != 1 || k.rank() != 1) throw ContractViolation("convolve_1d: expects 1-D signal and kernel");
  const std::size_t n = x.samples.size();
  const std::size_t len = k.taps.size();
  if (len > n) throw ContractViolation("convolve_1d: kernel longer than signal");
  const auto ref = static_cast<std::ptrdiff_t>(k.reference[0]);

  ComplexField y;
  y.dims = x.dims;
  y.samples.assign(n, Complex{});
  parallel_for(n, [&](std::size_t t) {
    Complex acc{};
    for (std::size_t s = 0; s < len; ++s) {
      std::size_t idx = 0;
      const auto pos = static_cast<std::ptrdiff_t>(t) + static_cast<std::ptrdiff_t>(s) - ref;
      if (resolve(pos, n, boundary, idx)) acc += k.taps[s] * x.samples[idx];
    }
    y.samples[t] = acc;
  });
  return y;
}

ComplexField convolve_2d(const ComplexField& img, const KernelQ& k, BoundaryMode boundary) {
  if (img.rank() != 2 || k.rank() != 2) throw ContractViolation("convolve_2d: expects 2-D image and kernel");
  const std::size_t rows = img.dims[0], cols = img.dims[1];
  const std::size_t kr = k.dims[0], kc = k.dims[1];
  if (kr > rows || kc > cols) throw ContractViolation("convolve_2d: kernel larger than image");
  const auto ref_r = static_cast<std::ptrdiff_t>(k.reference[0]);
  const auto ref_c = static_cast<std::ptrdiff_t>(k.reference[1]);

  ComplexField y;
  y.dims = img.dims;
  y.samples.assign(rows * cols, Complex{});
  parallel_for(rows, [&](std::size_t r) {
    std::vector<std::size_t> col_idx(kc);
    std::vector<bool> col_ok(kc);
    for (std::size_t c = 0; c < cols; ++c) {
      for (std::size_t j = 0; j < kc; ++j) {
        std::size_t idx = 0;
        col_ok[j] = resolve(static_cast<std::ptrdiff_t>(c + j) - ref_c, cols, boundary, idx);
        col_idx[j] = idx;
      }
      Complex acc{};
      for (std::size_t i = 0; i < kr; ++i) {
        std::size_t rr = 0;
        if (!resolve(static_cast<std::ptrdiff_t>(r + i) - ref_r, rows, boundary, rr)) continue;
        const Complex* row = img.samples.data() + rr * cols;
        const Complex* ktap = k.taps.data() + i * kc;
        for (std::size_t j = 0; j < kc; ++j) {
          if (col_ok[j]) acc += ktap[j] * row[col_idx[j]];
        }
      }
      y.samples[r * cols + c] = acc;
    }
  });
  return y;
}

ComplexField convolve(const ComplexField& x, const KernelQ& k, BoundaryMode boundary) {
  return x.rank() == 1 ? convolve_1d(x, k, boundary) : convolve_2d(x, k, boundary);
}

DecomposedField decompose(const ComplexField& f) {
  const std::size_t n = f.samples.size();
  DecomposedField d;
  d.dims = f.dims;
  d.re.resize(n);
  d.im.resize(n);
  d.angle.resize(n);
  d.modulus.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double re = f.samples[i].real();
    const double im = f.samples[i].imag();
    d.re[i] = re;
    d.im[i] = im;
    d.modulus[i] = std::hypot(re, im);
    if (im == 0.0) {
      d.angle[i] = re < 0.0 ? std::numbers::pi : 0.0;
    } else {
      d.angle[i] = std::atan2(im, re);
    }
  }
  return d;
}

KernelQ log_kernel(std::size_t size, double sigma) {
  require_odd(size, "log_kernel");
  require_sigma(sigma, "log_kernel");
  const auto half = static_cast<double>(size / 2);
  const double s2 = sigma * sigma;
  std::vector<double> taps(size * size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      const double y = static_cast<double>(i) - half;
      const double x = static_cast<double>(j) - half;
      const double r2 = x * x + y * y;
      const double g = std::exp(-r2 / (2 * s2)) / (2 * std::numbers::pi * s2);
      taps[i * size + j] = (r2 - 2 * s2) / (s2 * s2) * g;
    }
  }
  const double mean = std::accumulate(taps.begin(), taps.end(), 0.0) / static_cast<double>(taps.size());
  for (auto& t : taps) t -= mean;
  return real_kernel({size, size}, taps);
}

KernelQ gaussian_kernel(std::size_t size, double sigma) {
  require_odd(size, "gaussian_kernel");
  require_sigma(sigma, "gaussian_kernel");
  const auto half = static_cast<double>(size / 2);
  std::vector<double> taps(size * size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      const double y = static_cast<double>(i) - half;
      const double x = static_cast<double>(j) - half;
      taps[i * size + j] = std::exp(-(x * x + y * y) / (2 * sigma * sigma));
    }
  }
  const double sum = std::accumulate(taps.begin(), taps.end(), 0.0);
  for (auto& t : taps) t /= sum;
  return real_kernel({size, size}, taps);
}

KernelQ log_kernel_1d(std::size_t size, double sigma) {
  require_odd(size, "log_kernel_1d");
  require_sigma(sigma, "log_kernel_1d");
  const auto half = static_cast<double>(size / 2);
  const double s2 = sigma * sigma;
  std::vector<double> taps(size);
  for (std::size_t i = 0; i < size; ++i) {
    const double x = static_cast<double>(i) - half;
    const double g = std::exp(-x * x / (2 * s2)) / (std::sqrt(2 * std::numbers::pi) * sigma);
    taps[i] = (x * x - s2) / (s2 * s2) * g;
  }
  const double mean = std::accumulate(taps.begin(), taps.end(), 0.0) / static_cast<double>(size);
  for (auto& t : taps) t -= mean;
  return real_kernel({size}, taps);
}

KernelQ gaussian_kernel_1d(std::size_t size, double sigma) {
  require_odd(size, "gaussian_kernel_1d");
  require_sigma(sigma, "gaussian_kernel_1d");
  const auto half = static_cast<double>(size / 2);
  std::vector<double> taps(size);
  for (std::size_t i = 0; i < size; ++i) {
    const double x = static_cast<double>(i) - half;
    taps[i] = std::exp(-x * x / (2 * sigma * sigma));
  }
  const double sum = std::accumulate(taps.begin(), taps.end(), 0.0);
  for (auto& t : taps) t /= sum;
  return real_kernel({size}, taps);
}

double pearson(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size() || a.size() < 2) throw ContractViolation("pearson: need equal lengths >= 2");
  const double n = static_cast<double>(a.size());
  const double ma = std::accumulate(a.begin(), a.end(), 0.0) / n;
  const double mb = std::accumulate(b.begin(), b.end(), 0.0) / n;
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double da = a[i] - ma, db = b[i] - mb;
    sab += da * db;
    saa += da * da;
    sbb += db * db;
  }
  if (saa == 0.0 || sbb == 0.0) return 0.0;
  return sab / std::sqrt(saa * sbb);
}

}  // namespace cofilt
