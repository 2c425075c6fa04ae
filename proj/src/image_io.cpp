#include "cofilt/image_io.hpp"

#include <png.h>

#include <cstdio>
#include <fstream>
#include <memory>

#include "cofilt/errors.hpp"

namespace cofilt {

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const { std::fclose(f); }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

FilePtr open_file(const std::string& path, const char* mode) {
  FilePtr f(std::fopen(path.c_str(), mode));
  if (!f) throw IoError("cannot open '" + path + "'");
  return f;
}

// Next whitespace-delimited token of a PNM header, skipping comments.
std::string pnm_token(std::istream& in) {
  std::string tok;
  int c;
  while ((c = in.get()) != EOF) {
    if (c == '#') {
      while ((c = in.get()) != EOF && c != '\n') {
      }
      continue;
    }
    if (std::isspace(c)) {
      if (!tok.empty()) break;
      continue;
    }
    tok.push_back(static_cast<char>(c));
  }
  return tok;
}

std::size_t pnm_number(std::istream& in, const std::string& path) {
  const std::string tok = pnm_token(in);
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 9) {
    throw FormatError("'" + path + "': bad PGM header");
  }
  return std::stoul(tok);
}

void on_png_error(png_structp png, png_const_charp msg) {
  auto* err = static_cast<std::string*>(png_get_error_ptr(png));
  if (err) *err = msg;
  png_longjmp(png, 1);
}

void on_png_warning(png_structp, png_const_charp) {}

}  // namespace

Gray8Image read_pgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  if (pnm_token(in) != "P5") throw FormatError("'" + path + "': not a binary PGM (P5)");
  Gray8Image img;
  img.cols = pnm_number(in, path);
  img.rows = pnm_number(in, path);
  const std::size_t maxval = pnm_number(in, path);
  if (img.cols == 0 || img.rows == 0 || maxval == 0 || maxval > 255) {
    throw FormatError("'" + path + "': only 8-bit PGM is supported");
  }
  img.pixels.resize(img.rows * img.cols);
  if (!in.read(reinterpret_cast<char*>(img.pixels.data()), static_cast<std::streamsize>(img.pixels.size()))) {
    throw FormatError("'" + path + "': truncated PGM data");
  }
  if (maxval != 255) {
    for (auto& p : img.pixels) p = static_cast<std::uint8_t>((p * 255u + maxval / 2) / maxval);
  }
  return img;
}

void write_pgm(const std::string& path, const Gray8Image& img) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << "P5\n" << img.cols << ' ' << img.rows << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.pixels.data()), static_cast<std::streamsize>(img.pixels.size()));
  if (!out) throw IoError("write failed for '" + path + "'");
}

Gray8Image read_png(const std::string& path) {
  FilePtr fp = open_file(path, "rb");
  std::string error;
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, &error, on_png_error, on_png_warning);
  if (!png) throw IoError("libpng initialisation failed");
  png_infop info = png_create_info_struct(png);
  Gray8Image img;
  std::vector<png_bytep> row_ptrs;
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw FormatError("'" + path + "': " + (error.empty() ? "PNG decode failed" : error));
  }
  png_init_io(png, fp.get());
  png_read_info(png, info);

  const png_byte color = png_get_color_type(png, info);
  const png_byte depth = png_get_bit_depth(png, info);
  if (depth == 16) png_set_strip_16(png);
  if (color == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (color == PNG_COLOR_TYPE_GRAY && depth < 8) png_set_expand_gray_1_2_4_to_8(png);
  if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
  if (color & PNG_COLOR_MASK_ALPHA || png_get_valid(png, info, PNG_INFO_tRNS)) png_set_strip_alpha(png);
  if (color == PNG_COLOR_TYPE_RGB || color == PNG_COLOR_TYPE_RGB_ALPHA || color == PNG_COLOR_TYPE_PALETTE) {
    png_set_rgb_to_gray_fixed(png, 1, -1, -1);
  }
  png_read_update_info(png, info);

  img.cols = png_get_image_width(png, info);
  img.rows = png_get_image_height(png, info);
  if (png_get_rowbytes(png, info) != img.cols) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw FormatError("'" + path + "': unsupported PNG layout");
  }
  img.pixels.resize(img.rows * img.cols);
  row_ptrs.resize(img.rows);
  for (std::size_t r = 0; r < img.rows; ++r) row_ptrs[r] = img.pixels.data() + r * img.cols;
  png_read_image(png, row_ptrs.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return img;
}

void write_png(const std::string& path, const Gray8Image& img) {
  FilePtr fp = open_file(path, "wb");
  std::string error;
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, &error, on_png_error, on_png_warning);
  if (!png) throw IoError("libpng initialisation failed");
  png_infop info = png_create_info_struct(png);
  std::vector<png_bytep> row_ptrs(img.rows);
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw IoError("'" + path + "': " + (error.empty() ? "PNG encode failed" : error));
  }
  png_init_io(png, fp.get());
  png_set_IHDR(png, info, static_cast<png_uint_32>(img.cols), static_cast<png_uint_32>(img.rows), 8,
               PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (std::size_t r = 0; r < img.rows; ++r) {
    row_ptrs[r] = const_cast<png_bytep>(img.pixels.data() + r * img.cols);
  }
  png_write_image(png, row_ptrs.data());
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

Gray8Image read_gray_image(const std::string& path) {
  unsigned char sig[8] = {};
  {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    in.read(reinterpret_cast<char*>(sig), sizeof sig);
    if (in.gcount() < 2) throw FormatError("'" + path + "': file too short");
  }
  if (sig[0] == 'P' && sig[1] == '5') return read_pgm(path);
  if (png_sig_cmp(sig, 0, 8) == 0) return read_png(path);
  throw FormatError("'" + path + "': unsupported image format (need P5 PGM or PNG)");
}

ComplexField to_field(const Gray8Image& img) {
  ComplexVector samples(img.pixels.size());
  for (std::size_t i = 0; i < samples.size(); ++i) samples[i] = static_cast<double>(img.pixels[i]);
  return ComplexField::image(img.rows, img.cols, std::move(samples));
}

}  // namespace cofilt
