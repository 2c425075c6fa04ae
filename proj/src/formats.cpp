#include "cofilt/formats.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "cofilt/errors.hpp"

namespace cofilt {

namespace {

std::string shortest(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool parse_double(std::string_view s, double& out) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && std::isfinite(out);
}

double parse_unit_or_number(std::string_view s) {
  if (s.empty() || s == "+") return 1.0;
  if (s == "-") return -1.0;
  double v = 0.0;
  if (!parse_double(s, v)) throw FormatError("bad number '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

// Value of `key=` inside a header line.
std::string_view header_field(std::string_view line, std::string_view key) {
  const std::string needle = std::string(key) + "=";
  std::size_t pos = line.find(needle);
  while (pos != std::string_view::npos && pos > 0 && line[pos - 1] != ' ' && line[pos - 1] != '#') {
    pos = line.find(needle, pos + 1);
  }
  if (pos == std::string_view::npos) throw FormatError("header missing '" + std::string(key) + "'");
  std::string_view rest = line.substr(pos + needle.size());
  return rest.substr(0, rest.find(' '));
}

void put_le_double(std::ostream& out, double v) {
  auto bits = std::bit_cast<std::uint64_t>(v);
  unsigned char bytes[8];
  for (int i = 0; i < 8; ++i) bytes[i] = static_cast<unsigned char>((bits >> (8 * i)) & 0xffu);
  out.write(reinterpret_cast<const char*>(bytes), 8);
}

double get_le_double(std::istream& in) {
  unsigned char bytes[8];
  if (!in.read(reinterpret_cast<char*>(bytes), 8)) throw FormatError("cfd: truncated sample data");
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(bytes[i]) << (8 * i);
  return std::bit_cast<double>(bits);
}

}  // namespace

std::string format_alpha(Complex alpha) {
  const double im = alpha.imag() == 0.0 ? 0.0 : alpha.imag();
  std::string s = shortest(alpha.real());
  if (std::signbit(im)) {
    s += "-" + shortest(-im);
  } else {
    s += "+" + shortest(im);
  }
  return s + "i";
}

Complex parse_alpha(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw FormatError("empty complex value");
  if (s.back() != 'i') {
    double re = 0.0;
    if (!parse_double(s, re)) throw FormatError("bad complex value '" + std::string(text) + "'");
    return {re, 0.0};
  }
  s.remove_suffix(1);
  std::size_t split_at = std::string_view::npos;
  for (std::size_t p = 1; p < s.size(); ++p) {
    const char c = s[p], prev = s[p - 1];
    if ((c == '+' || c == '-') && prev != 'e' && prev != 'E' && prev != '+' && prev != '-') split_at = p;
  }
  try {
    if (split_at == std::string_view::npos) return {0.0, parse_unit_or_number(s)};
    double re = 0.0;
    if (!parse_double(s.substr(0, split_at), re)) throw FormatError("bad real part");
    std::string_view im_text = s.substr(split_at);
    if (im_text.size() >= 2 && im_text[0] == '+' && im_text[1] == '-') im_text.remove_prefix(1);
    return {re, parse_unit_or_number(im_text)};
  } catch (const FormatError&) {
    throw FormatError("bad complex value '" + std::string(text) + "'");
  }
}

FilterKind parse_kind(std::string_view text) {
  if (text == "D" || text == "d" || text == "derivative") return FilterKind::Derivative;
  if (text == "I" || text == "i" || text == "integral") return FilterKind::Integral;
  throw FormatError("unknown filter kind '" + std::string(text) + "'");
}

BoundaryMode parse_boundary(std::string_view text) {
  if (text == "replicate") return BoundaryMode::Replicate;
  if (text == "zero") return BoundaryMode::Zero;
  if (text == "circular") return BoundaryMode::Circular;
  throw FormatError("unknown boundary mode '" + std::string(text) + "'");
}

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_filter_dump(std::ostream& out, const Filter1D& f) {
  out << "# kind=" << kind_tag(f.kind) << " alpha=" << format_alpha(f.order) << " n=" << f.taps.size()
      << " route=" << route_tag(f.route) << '\n';
  for (std::size_t k = 0; k < f.taps.size(); ++k) {
    out << k << ',' << format_number(f.taps[k].real()) << ',' << format_number(f.taps[k].imag()) << '\n';
  }
}

Filter1D read_filter_dump(std::istream& in) {
  std::string header;
  if (!std::getline(in, header) || header.rfind("# ", 0) != 0) throw FormatError("filter dump: missing header");
  Filter1D f;
  f.kind = parse_kind(header_field(header, "kind"));
  f.order = parse_alpha(header_field(header, "alpha"));
  const std::string_view route = header_field(header, "route");
  if (route == "spectral") {
    f.route = Route::Spectral;
  } else if (route == "folded") {
    f.route = Route::FoldedSeries;
  } else {
    throw FormatError("filter dump: unknown route");
  }
  double n_value = 0.0;
  if (!parse_double(header_field(header, "n"), n_value) || n_value < 1 || std::floor(n_value) != n_value) {
    throw FormatError("filter dump: bad n");
  }
  const auto n = static_cast<std::size_t>(n_value);
  f.taps.assign(n, Complex{});
  std::vector<bool> seen(n, false);
  std::string line;
  std::size_t count = 0;
  while (std::getline(in, line)) {
    const std::string_view l = trim(line);
    if (l.empty() || l.front() == '#') continue;
    const auto parts = split(l, ',');
    double k = 0.0, re = 0.0, im = 0.0;
    if (parts.size() != 3 || !parse_double(parts[0], k) || !parse_double(parts[1], re) ||
        !parse_double(parts[2], im) || k < 0 || k >= n_value || std::floor(k) != k) {
      throw FormatError("filter dump: bad tap line '" + line + "'");
    }
    const auto idx = static_cast<std::size_t>(k);
    if (seen[idx]) throw FormatError("filter dump: duplicate tap index");
    seen[idx] = true;
    f.taps[idx] = {re, im};
    ++count;
  }
  if (count != n) throw FormatError("filter dump: expected " + std::to_string(n) + " taps");
  return f;
}

void write_kernel_dump(std::ostream& out, const KernelQ& k) {
  out << "# dims=";
  for (std::size_t a = 0; a < k.dims.size(); ++a) out << (a ? "x" : "") << k.dims[a];
  out << " reference=";
  for (std::size_t a = 0; a < k.reference.size(); ++a) out << (a ? "," : "") << k.reference[a];
  out << '\n';
  for (const auto& t : k.taps) out << format_number(t.real()) << ',' << format_number(t.imag()) << '\n';
}

void write_signal(std::ostream& out, const ComplexField& f) {
  for (std::size_t i = 0; i < f.samples.size(); ++i) {
    out << (i + 1) << ',' << format_number(f.samples[i].real()) << ',' << format_number(f.samples[i].imag())
        << '\n';
  }
}

ComplexField read_signal(std::istream& in) {
  ComplexVector samples;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    const std::string_view l = trim(line);
    if (l.empty() || l.front() == '#') continue;
    const auto parts = split(l, ',');
    double t = 0.0, re = 0.0, im = 0.0;
    const bool ok = (parts.size() == 2 || parts.size() == 3) && parse_double(parts[0], t) &&
                    parse_double(parts[1], re) && (parts.size() == 2 || parse_double(parts[2], im));
    if (!ok) {
      if (first) {
        first = false;
        continue;  // column header
      }
      throw FormatError("signal: bad line '" + line + "'");
    }
    first = false;
    samples.emplace_back(re, im);
  }
  if (samples.empty()) throw FormatError("signal: no samples");
  return ComplexField::signal(std::move(samples));
}

void write_signal_planes(std::ostream& out, const DecomposedField& d) {
  for (std::size_t i = 0; i < d.re.size(); ++i) {
    out << (i + 1) << ',' << format_number(d.re[i]) << ',' << format_number(d.im[i]) << ','
        << format_number(d.angle[i]) << ',' << format_number(d.modulus[i]) << '\n';
  }
}

void write_cfd(std::ostream& out, const ComplexField& f) {
  out << "CFD1 " << f.rows() << ' ' << f.cols() << '\n';
  for (const auto& s : f.samples) {
    put_le_double(out, s.real());
    put_le_double(out, s.imag());
  }
}

ComplexField read_cfd(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw FormatError("cfd: missing header");
  std::istringstream hs(header);
  std::string magic;
  long long rows = -1, cols = -1;
  hs >> magic >> rows >> cols;
  if (magic != "CFD1" || !hs || rows < 1 || cols < 1) throw FormatError("cfd: bad header");
  const auto r = static_cast<std::size_t>(rows), c = static_cast<std::size_t>(cols);
  if (r > std::numeric_limits<std::size_t>::max() / c / 16) throw FormatError("cfd: dimensions too large");
  ComplexVector samples(r * c);
  for (auto& s : samples) {
    const double re = get_le_double(in);
    const double im = get_le_double(in);
    s = {re, im};
  }
  if (r == 1) return ComplexField::signal(std::move(samples));
  return ComplexField::image(r, c, std::move(samples));
}

std::vector<std::uint8_t> scale_to_gray8(std::span<const double> plane) {
  std::vector<std::uint8_t> out(plane.size(), 0);
  if (plane.empty()) return out;
  const auto [lo_it, hi_it] = std::minmax_element(plane.begin(), plane.end());
  const double lo = *lo_it, hi = *hi_it;
  if (!(hi > lo)) return out;
  const double scale = 255.0 / (hi - lo);
  for (std::size_t i = 0; i < plane.size(); ++i) {
    out[i] = static_cast<std::uint8_t>(std::lround((plane[i] - lo) * scale));
  }
  return out;
}

}  // namespace cofilt
