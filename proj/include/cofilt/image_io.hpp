#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cofilt/apply.hpp"

namespace cofilt {

struct Gray8Image {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint8_t> pixels;  // row-major
};

// Binary PGM (P5), maxval <= 255.
Gray8Image read_pgm(const std::string& path);
void write_pgm(const std::string& path, const Gray8Image& img);

// PNG via libpng. Colour inputs are converted to 8-bit gray on read.
Gray8Image read_png(const std::string& path);
void write_png(const std::string& path, const Gray8Image& img);

/// Picks the decoder from the file signature. Throws IoError / FormatError.
Gray8Image read_gray_image(const std::string& path);

ComplexField to_field(const Gray8Image& img);

}  // namespace cofilt
