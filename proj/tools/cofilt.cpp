#include <cofilt/cofilt.h>

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

enum ExitCode { kOk = 0, kCheckFailed = 1, kUsage = 2, kIo = 3 };

struct Failure {
  int code;
  std::string message;
};

int exit_for(cofilt_status s) {
  switch (s) {
    case COFILT_OK:
      return kOk;
    case COFILT_ERR_IO:
    case COFILT_ERR_FORMAT:
    case COFILT_ERR_INTERNAL:
      return kIo;
    default:
      return kUsage;
  }
}

void check(cofilt_status s, const std::string& what) {
  if (s != COFILT_OK) throw Failure{exit_for(s), what + ": " + cofilt_last_error()};
}

struct FilterDeleter {
  void operator()(cofilt_filter* f) const { cofilt_filter_destroy(f); }
};
struct KernelDeleter {
  void operator()(cofilt_kernel* k) const { cofilt_kernel_destroy(k); }
};
struct FieldDeleter {
  void operator()(cofilt_field* f) const { cofilt_field_destroy(f); }
};
using Filter = std::unique_ptr<cofilt_filter, FilterDeleter>;
using Kernel = std::unique_ptr<cofilt_kernel, KernelDeleter>;
using Field = std::unique_ptr<cofilt_field, FieldDeleter>;

cofilt_complex parse_alpha(const std::string& text) {
  cofilt_complex a{};
  if (cofilt_parse_alpha(text.c_str(), &a) != COFILT_OK) throw Failure{kUsage, cofilt_last_error()};
  return a;
}

cofilt_kind parse_kind(const std::string& text) {
  cofilt_kind k{};
  if (cofilt_parse_kind(text.c_str(), &k) != COFILT_OK) throw Failure{kUsage, cofilt_last_error()};
  return k;
}

cofilt_boundary parse_boundary(const std::string& text) {
  cofilt_boundary b{};
  if (cofilt_parse_boundary(text.c_str(), &b) != COFILT_OK) throw Failure{kUsage, cofilt_last_error()};
  return b;
}

std::vector<size_t> parse_dims(const std::string& text) {
  std::vector<size_t> dims;
  size_t start = 0;
  while (start <= text.size()) {
    const size_t pos = text.find('x', start);
    const std::string part = text.substr(start, pos == std::string::npos ? std::string::npos : pos - start);
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos || part.size() > 9) {
      throw Failure{kUsage, "bad --dims '" + text + "' (expected e.g. 7x7 or 9)"};
    }
    dims.push_back(std::stoul(part));
    if (dims.back() == 0) throw Failure{kUsage, "--dims entries must be positive"};
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  if (dims.size() > 2) throw Failure{kUsage, "--dims supports at most two axes"};
  return dims;
}

std::string format_alpha(cofilt_complex a) {
  char buf[96];
  size_t needed = 0;
  check(cofilt_format_alpha(a, buf, sizeof buf, &needed), "format");
  return buf;
}

Filter make_filter(cofilt_kind kind, cofilt_complex alpha, size_t n) {
  cofilt_filter* f = nullptr;
  check(cofilt_filter_spectral(kind, alpha, n, &f), "filter");
  return Filter(f);
}

Kernel recenter(const cofilt_filter* f) {
  cofilt_kernel* k = nullptr;
  check(cofilt_kernel_recenter(f, &k), "layout");
  return Kernel(k);
}

Kernel place(const cofilt_filter* f, const std::vector<size_t>& dims) {
  cofilt_kernel* k = nullptr;
  check(cofilt_kernel_place(f, dims.data(), dims.size(), &k), "layout");
  return Kernel(k);
}

Field convolve(const cofilt_field* x, const cofilt_kernel* k, cofilt_boundary b) {
  cofilt_field* y = nullptr;
  check(cofilt_field_convolve(x, k, b, &y), "apply");
  return Field(y);
}

Field read_field(const std::string& path) {
  if (!fs::exists(path)) throw Failure{kIo, "cannot open '" + path + "'"};
  cofilt_field* f = nullptr;
  const std::string ext = fs::path(path).extension().string();
  if (ext == ".csv" || ext == ".txt") {
    check(cofilt_field_read_signal(path.c_str(), &f), "read");
  } else if (ext == ".cfd") {
    check(cofilt_field_read_cfd(path.c_str(), &f), "read");
  } else {
    check(cofilt_field_read_image(path.c_str(), &f), "read");
  }
  return Field(f);
}

std::vector<double> imag_part(const cofilt_field* f) {
  std::vector<double> im(cofilt_field_size(f));
  check(cofilt_field_decompose(f, nullptr, im.data(), nullptr, nullptr), "decompose");
  return im;
}

std::vector<double> real_part(const cofilt_field* f) {
  std::vector<double> re(cofilt_field_size(f));
  check(cofilt_field_decompose(f, re.data(), nullptr, nullptr, nullptr), "decompose");
  return re;
}

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Failure{kIo, "cannot create '" + dir + "': " + ec.message()};
}

std::string join(const std::string& dir, const std::string& name) { return (fs::path(dir) / name).string(); }

// ---- subcommands ----

struct GenOptions {
  std::string kind = "D";
  std::string alpha;
  size_t n = 0;
  std::string route = "spectral";
  double tol = 1e-10;
  size_t max_terms = 100000;
  std::string out = "-";
};

int run_gen(const GenOptions& o) {
  const cofilt_kind kind = parse_kind(o.kind);
  const cofilt_complex alpha = parse_alpha(o.alpha);
  cofilt_filter* raw = nullptr;
  if (o.route == "folded") {
    if (!(alpha.re > 0)) {
      throw Failure{kUsage, "folded route needs Re(alpha) > 0 (got " + format_alpha(alpha) +
                                "); the series diverges, use --route spectral"};
    }
    check(cofilt_filter_folded(kind, alpha, o.n, o.tol, o.max_terms, &raw), "gen");
  } else {
    check(cofilt_filter_spectral(kind, alpha, o.n, &raw), "gen");
  }
  Filter f(raw);
  if (cofilt_filter_budget_exhausted(f.get())) {
    std::fprintf(stderr, "warning: term budget exhausted before reaching tol=%g\n", o.tol);
  }
  check(cofilt_filter_write(f.get(), o.out.c_str()), "write");
  return kOk;
}

struct LayoutOptions {
  std::string in;
  std::string kind = "D";
  std::string alpha;
  size_t n = 0;
  std::string dims;
  std::string out = "-";
};

int run_layout(const LayoutOptions& o) {
  Filter f;
  if (!o.in.empty()) {
    cofilt_filter* raw = nullptr;
    check(cofilt_filter_read(o.in.c_str(), &raw), "read");
    f.reset(raw);
  } else {
    if (o.alpha.empty()) throw Failure{kUsage, "layout needs --in or --alpha"};
    size_t n = o.n;
    if (n == 0 && !o.dims.empty()) {
      n = 1;
      for (size_t d : parse_dims(o.dims)) n *= d;
    }
    if (n == 0) throw Failure{kUsage, "layout needs --n or --dims"};
    f = make_filter(parse_kind(o.kind), parse_alpha(o.alpha), n);
  }
  Kernel k = o.dims.empty() ? recenter(f.get()) : place(f.get(), parse_dims(o.dims));
  check(cofilt_kernel_write(k.get(), o.out.c_str()), "write");
  return kOk;
}

struct ApplyOptions {
  std::string in;
  std::string out;
  std::string kind = "D";
  std::string alpha = "1+1i";
  std::string dims;
  std::string boundary = "replicate";
};

int run_apply(const ApplyOptions& o) {
  Field x = read_field(o.in);
  const size_t rank = cofilt_field_rank(x.get());
  const cofilt_kind kind = parse_kind(o.kind);
  const cofilt_complex alpha = parse_alpha(o.alpha);
  const cofilt_boundary boundary = parse_boundary(o.boundary);

  std::vector<size_t> dims = o.dims.empty() ? (rank == 2 ? std::vector<size_t>{7, 7} : std::vector<size_t>{7})
                                            : parse_dims(o.dims);
  if (dims.size() != rank) throw Failure{kUsage, "--dims rank does not match the input"};
  size_t n = 1;
  for (size_t d : dims) n *= d;
  Filter f = make_filter(kind, alpha, n);
  Kernel k = rank == 1 ? recenter(f.get()) : place(f.get(), dims);
  Field y = convolve(x.get(), k.get(), boundary);

  if (rank == 1) {
    check(cofilt_field_write_signal(y.get(), (o.out + ".csv").c_str()), "write");
    check(cofilt_field_write_signal_planes(y.get(), (o.out + "_planes.csv").c_str()), "write");
  } else {
    check(cofilt_field_write_cfd(y.get(), (o.out + ".cfd").c_str()), "write");
    check(cofilt_field_write_planes(y.get(), o.out.c_str(), COFILT_PLANE_ALL), "write");
  }
  return kOk;
}

struct DecomposeOptions {
  std::string in;
  std::string out;
};

int run_decompose(const DecomposeOptions& o) {
  Field f = read_field(o.in);
  if (cofilt_field_rank(f.get()) == 2) {
    check(cofilt_field_write_planes(f.get(), o.out.c_str(), COFILT_PLANE_ALL), "write");
  } else {
    check(cofilt_field_write_signal_planes(f.get(), (o.out + "_planes.csv").c_str()), "write");
  }
  return kOk;
}

int run_synth(const std::string& out) {
  cofilt_field* raw = nullptr;
  check(cofilt_field_synth(&raw), "synth");
  Field x(raw);
  check(cofilt_field_write_signal(x.get(), out.c_str()), "write");
  return kOk;
}

struct VerifyOptions {
  std::string only;
  std::string alpha;
  std::optional<size_t> n;
  std::optional<unsigned> m;
  std::string kind;
};

int run_verify(const VerifyOptions& o) {
  std::vector<cofilt_report> reports;
  const bool targeted = !o.alpha.empty() || o.n || o.m;
  if (!targeted) {
    size_t count = 0;
    check(cofilt_verify_default(nullptr, 0, &count), "verify");
    reports.resize(count);
    check(cofilt_verify_default(reports.data(), reports.size(), &count), "verify");
    if (!o.only.empty()) {
      std::erase_if(reports, [&](const cofilt_report& r) { return o.only != r.check_name; });
    }
  } else {
    if (o.only.empty()) throw Failure{kUsage, "--alpha/--n/--m need --only"};
    if (!o.n) throw Failure{kUsage, "--n is required"};
    cofilt_report r{};
    const size_t n = *o.n;
    auto need_alpha = [&] {
      if (o.alpha.empty()) throw Failure{kUsage, "--alpha is required for " + o.only};
      return parse_alpha(o.alpha);
    };
    if (o.only == "realness") {
      const cofilt_complex a = need_alpha();
      if (a.im != 0.0) throw Failure{kUsage, "realness needs a real --alpha"};
      check(cofilt_check_realness(a.re, n, &r), "verify");
    } else if (o.only == "integer") {
      if (!o.m) throw Failure{kUsage, "--m is required for integer"};
      check(cofilt_check_integer_reduction(*o.m, n, &r), "verify");
    } else if (o.only == "sums") {
      check(cofilt_check_sums(need_alpha(), n, &r), "verify");
    } else if (o.only == "inverse") {
      const cofilt_kind kind = parse_kind(o.kind.empty() ? "D" : o.kind);
      check(cofilt_check_convolution_inverse(kind, need_alpha(), n, &r), "verify");
    } else if (o.only == "nullspace") {
      check(cofilt_check_nullspace(need_alpha(), n, &r), "verify");
    } else if (o.only == "integral") {
      check(cofilt_check_integral_constraints(need_alpha(), n, &r), "verify");
    }
    reports.push_back(r);
  }
  bool ok = true;
  for (const auto& r : reports) {
    std::printf("%s\n", r.line);
    ok = ok && r.passed;
  }
  return ok ? kOk : kCheckFailed;
}

// ---- repro ----

constexpr cofilt_complex kOrder{1.0, 1.0};

int repro_synthetic(const std::string& dir) {
  ensure_dir(dir);
  cofilt_field* raw = nullptr;
  check(cofilt_field_synth(&raw), "synth");
  Field x(raw);

  Filter d = make_filter(COFILT_DERIVATIVE, kOrder, 7);
  Filter i = make_filter(COFILT_INTEGRAL, kOrder, 7);
  Kernel kd = recenter(d.get());
  Kernel ki = recenter(i.get());
  cofilt_kernel* raw_k = nullptr;
  check(cofilt_kernel_log(7, 0.5, 1, &raw_k), "kernel");
  Kernel klog(raw_k);
  check(cofilt_kernel_gaussian(7, 1.0, 1, &raw_k), "kernel");
  Kernel kgauss(raw_k);

  const auto b = COFILT_BOUNDARY_REPLICATE;
  Field yd = convolve(x.get(), kd.get(), b);
  Field yi = convolve(x.get(), ki.get(), b);
  Field ylog = convolve(x.get(), klog.get(), b);
  Field ygauss = convolve(x.get(), kgauss.get(), b);

  check(cofilt_field_write_signal(x.get(), join(dir, "signal.csv").c_str()), "write");
  check(cofilt_field_write_signal(yd.get(), join(dir, "d_response.csv").c_str()), "write");
  check(cofilt_field_write_signal(yi.get(), join(dir, "i_response.csv").c_str()), "write");
  check(cofilt_field_write_signal(ylog.get(), join(dir, "log_response.csv").c_str()), "write");
  check(cofilt_field_write_signal(ygauss.get(), join(dir, "gaussian_response.csv").c_str()), "write");
  check(cofilt_field_write_signal_planes(yd.get(), join(dir, "d_planes.csv").c_str()), "write");

  // t = 10..990 lives at indices 9..989.
  const std::vector<double> im = imag_part(yd.get());
  const std::vector<double> lg = real_part(ylog.get());
  double r = 0.0;
  check(cofilt_pearson(im.data() + 9, lg.data() + 9, 981, &r), "pearson");
  std::printf("pearson_im_d_vs_log %.17g\n", r);
  return kOk;
}

int repro_image(const std::string& in, const std::string& dir, bool angle_only) {
  if (in.empty()) throw Failure{kUsage, "--in <image> is required"};
  Field x = read_field(in);
  if (cofilt_field_rank(x.get()) != 2) throw Failure{kIo, "'" + in + "' is not an image"};
  ensure_dir(dir);
  const std::vector<size_t> dims{7, 7};
  const auto b = COFILT_BOUNDARY_REPLICATE;

  Filter fi = make_filter(COFILT_INTEGRAL, kOrder, 49);
  Field yi = convolve(x.get(), place(fi.get(), dims).get(), b);
  if (angle_only) {
    check(cofilt_field_write_planes(yi.get(), join(dir, "trus").c_str(), COFILT_PLANE_ANGLE), "write");
    return kOk;
  }
  Filter fd = make_filter(COFILT_DERIVATIVE, kOrder, 49);
  Field yd = convolve(x.get(), place(fd.get(), dims).get(), b);
  check(cofilt_field_write_planes(yd.get(), join(dir, "d").c_str(), COFILT_PLANE_ALL), "write");
  check(cofilt_field_write_planes(yi.get(), join(dir, "i").c_str(), COFILT_PLANE_ALL), "write");
  check(cofilt_field_write_cfd(yd.get(), join(dir, "d.cfd").c_str()), "write");
  check(cofilt_field_write_cfd(yi.get(), join(dir, "i.cfd").c_str()), "write");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Complex-order derivative and integral filters"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(cofilt_version()));

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a 1-D filter dump");
  gen_cmd->add_option("--kind", gen.kind, "D or I")->capture_default_str();
  gen_cmd->add_option("--alpha", gen.alpha, "Order, e.g. 1+1i")->required();
  gen_cmd->add_option("--n", gen.n, "Filter length")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--route", gen.route)->check(CLI::IsMember({"spectral", "folded"}))->capture_default_str();
  gen_cmd->add_option("--tol", gen.tol, "Folded route tolerance")->capture_default_str();
  gen_cmd->add_option("--max-terms", gen.max_terms, "Folded route term budget")->capture_default_str();
  gen_cmd->add_option("--out", gen.out, "Output path, - for stdout")->capture_default_str();

  LayoutOptions layout;
  auto* layout_cmd = app.add_subcommand("layout", "Arrange a filter into a centered kernel");
  layout_cmd->add_option("--in", layout.in, "Filter dump to lay out");
  layout_cmd->add_option("--kind", layout.kind)->capture_default_str();
  layout_cmd->add_option("--alpha", layout.alpha);
  layout_cmd->add_option("--n", layout.n);
  layout_cmd->add_option("--dims", layout.dims, "e.g. 7x7; omitted means 1-D recentering");
  layout_cmd->add_option("--out", layout.out)->capture_default_str();

  ApplyOptions apply;
  auto* apply_cmd = app.add_subcommand("apply", "Filter a signal (.csv) or grayscale image (PGM/PNG)");
  apply_cmd->add_option("--in", apply.in)->required();
  apply_cmd->add_option("--out", apply.out, "Output prefix")->required();
  apply_cmd->add_option("--kind", apply.kind)->capture_default_str();
  apply_cmd->add_option("--alpha", apply.alpha)->capture_default_str();
  apply_cmd->add_option("--dims", apply.dims, "Kernel dims (default 7 or 7x7)");
  apply_cmd->add_option("--boundary", apply.boundary)
      ->check(CLI::IsMember({"replicate", "zero", "circular"}))
      ->capture_default_str();

  DecomposeOptions decompose;
  auto* decompose_cmd = app.add_subcommand("decompose", "Split a .cfd or signal into re/im/angle/mod planes");
  decompose_cmd->add_option("--in", decompose.in)->required();
  decompose_cmd->add_option("--out", decompose.out, "Output prefix")->required();

  std::string synth_out = "-";
  auto* synth_cmd = app.add_subcommand("synth", "Write the three-frequency test signal");
  synth_cmd->add_option("--out", synth_out)->capture_default_str();

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run the identity checks");
  verify_cmd->add_option("--only", verify.only)
      ->check(CLI::IsMember({"realness", "integer", "sums", "inverse", "nullspace", "integral"}));
  verify_cmd->add_option("--alpha", verify.alpha);
  verify_cmd->add_option("--n", verify.n)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--m", verify.m);
  verify_cmd->add_option("--kind", verify.kind);

  std::string experiment, repro_in, repro_dir = ".";
  auto* repro_cmd = app.add_subcommand("repro", "Reproduce an experiment");
  repro_cmd->add_option("experiment", experiment)
      ->required()
      ->check(CLI::IsMember({"synthetic", "image", "trus-style"}));
  repro_cmd->add_option("--in", repro_in, "Grayscale input image");
  repro_cmd->add_option("--out-dir", repro_dir)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*layout_cmd) return run_layout(layout);
    if (*apply_cmd) return run_apply(apply);
    if (*decompose_cmd) return run_decompose(decompose);
    if (*synth_cmd) return run_synth(synth_out);
    if (*verify_cmd) return run_verify(verify);
    if (*repro_cmd) {
      if (experiment == "synthetic") return repro_synthetic(repro_dir);
      return repro_image(repro_in, repro_dir, experiment == "trus-style");
    }
  } catch (const Failure& f) {
    std::fprintf(stderr, "cofilt: %s\n", f.message.c_str());
    return f.code;
  }
  return kUsage;
}
