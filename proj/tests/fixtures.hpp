#pragma once

#include <cstdint>

#include "efa/segment.hpp"

namespace fixture {

/// White disk on black; pixel centres within `radius` of (cx, cy) are lit.
inline efa::Raster disk(int width, int height, double cx, double cy, double radius,
                        std::uint8_t fg = 255, std::uint8_t bg = 0) {
  efa::Raster r(width, height, bg);
  for (int row = 0; row < height; ++row)
    for (int col = 0; col < width; ++col)
      if ((col - cx) * (col - cx) + (row - cy) * (row - cy) <= radius * radius) r.at(col, row) = fg;
  return r;
}

inline efa::RgbRaster to_rgb(const efa::Raster& g) {
  efa::RgbRaster out{g.width(), g.height(), {}};
  for (auto v : g.pixels()) out.pixels.push_back({v, v, v});
  return out;
}

inline efa::BinaryMask block(int width, int height, int col0, int row0, int cols, int rows) {
  efa::BinaryMask m(width, height);
  for (int r = row0; r < row0 + rows; ++r)
    for (int c = col0; c < col0 + cols; ++c) m.set(c, r, true);
  return m;
}

}  // namespace fixture
