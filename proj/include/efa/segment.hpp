#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "efa/contour.hpp"

namespace efa {

/// Row-major 8-bit grayscale image; row 0 is the top of the picture.
class Raster {
 public:
  Raster() = default;
  Raster(int width, int height, std::uint8_t fill = 0);
  Raster(int width, int height, std::vector<std::uint8_t> pixels);

  int width() const { return width_; }
  int height() const { return height_; }
  std::uint8_t at(int col, int row) const { return pixels_[index(col, row)]; }
  std::uint8_t& at(int col, int row) { return pixels_[index(col, row)]; }
  const std::vector<std::uint8_t>& pixels() const { return pixels_; }

  friend bool operator==(const Raster&, const Raster&) = default;

 private:
  std::size_t index(int col, int row) const {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(col);
  }
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> pixels_;
};

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;
};

struct RgbRaster {
  int width = 0;
  int height = 0;
  std::vector<Rgb> pixels;  // row-major
};

/// Foreground/background grid; stored as 0/1 bytes.
class BinaryMask {
 public:
  BinaryMask() = default;
  BinaryMask(int width, int height);

  int width() const { return width_; }
  int height() const { return height_; }
  bool get(int col, int row) const { return bits_[index(col, row)] != 0; }
  void set(int col, int row, bool v) { bits_[index(col, row)] = v ? 1 : 0; }
  bool in_bounds(int col, int row) const {
    return col >= 0 && row >= 0 && col < width_ && row < height_;
  }
  std::size_t count() const;
  BinaryMask complement() const;
  const std::vector<std::uint8_t>& bytes() const { return bits_; }
  std::vector<std::uint8_t>& bytes() { return bits_; }

  friend bool operator==(const BinaryMask&, const BinaryMask&) = default;

 private:
  std::size_t index(int col, int row) const {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(col);
  }
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> bits_;
};

Raster to_grayscale(const RgbRaster& rgb);
Raster invert(const Raster& r);
/// Linear stretch of the 1st/99th percentiles onto 0/255, clamped.
Raster enhance(const Raster& r);

std::vector<std::uint64_t> histogram(const Raster& r);

struct OtsuResult {
  int threshold = 0;
  BinaryMask mask;  // pixels strictly above threshold
};

/// Threshold maximizing between-class variance; lowest on ties.
int otsu_threshold_from_histogram(const std::vector<std::uint64_t>& hist);
OtsuResult otsu_threshold(const Raster& r);

/// 3x3 full structuring element, outside of the image counts as background.
BinaryMask erode(const BinaryMask& m, int iterations = 1);
BinaryMask dilate(const BinaryMask& m, int iterations = 1);

/// 8-connected component labels (0 = background, 1..count).
struct Components {
  std::vector<int> labels;
  std::vector<std::size_t> sizes;  // sizes[label - 1]
  int count() const { return static_cast<int>(sizes.size()); }
};
Components label_components(const BinaryMask& m);

/// Keeps the component containing `seed` (raster col/row), or the largest
/// one when no seed is given (lowest label wins a size tie).
BinaryMask select_component(const BinaryMask& m, std::optional<Pixel> seed = std::nullopt);

/// Outer border of the single component, traced anticlockwise in y-up
/// coordinates where y = height - 1 - row. Consecutive pixels are 8-adjacent
/// and the sequence closes on itself.
std::vector<Pixel> border_follow(const BinaryMask& m);

/// Sobel gradient magnitude strictly above `threshold`; edges replicate.
BinaryMask sobel_edges(const Raster& r, double threshold);

/// Raster row/col to the y-up frame used by contours, and back.
inline Pixel to_y_up(int col, int row, int height) { return {col, height - 1 - row}; }
inline Pixel to_raster(Pixel p, int height) { return {p.x, height - 1 - p.y}; }

// Image files: PNG (any bit depth/colour type libpng can expand), PGM/PPM.
RgbRaster read_image(const std::filesystem::path& path);
void write_png(const std::filesystem::path& path, const Raster& r);
void write_png(const std::filesystem::path& path, const RgbRaster& r);
void write_pgm(const std::filesystem::path& path, const Raster& r);

}  // namespace efa
