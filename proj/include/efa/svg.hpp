#pragma once

#include <span>
#include <string>
#include <string_view>

#include "efa/contour.hpp"

namespace efa {

std::string_view palette_color(std::size_t i);

/// Minimal SVG writer with a fixed viewBox. World coordinates are y-up and
/// mapped with a uniform scale; coordinates are printed with fixed precision
/// so identical input yields byte-identical documents.
class SvgCanvas {
 public:
  SvgCanvas(int width, int height, double margin = 20.0);

  /// World window covering `pts` (and the origin's axis lines if present).
  void fit(std::span<const Point> pts);
  /// Pixel frame: world == raster pixels, y down, no flip.
  void raster_frame(int image_width, int image_height);

  void polyline(std::span<const Point> pts, std::string_view color, double stroke_width,
                bool closed, std::string_view dash = {});
  void marker(Point p, std::string_view color, double radius = 4.0);
  void axes(std::string_view xlabel, std::string_view ylabel);
  /// Outline of the raster_frame image area.
  void rect_frame(std::string_view color);
  void text(double sx, double sy, std::string_view s, int size = 14);
  void legend_entry(std::size_t slot, std::string_view label, std::string_view color);

  std::string str() const;

 private:
  double sx(double x) const;
  double sy(double y) const;

  int width_;
  int height_;
  double margin_;
  double scale_ = 1.0;
  double x0_ = 0.0, y0_ = 0.0;  // world point at the lower-left of the plot area
  bool flip_ = true;
  double frame_w_ = 0.0, frame_h_ = 0.0;
  std::string body_;
};

std::string escape_xml(std::string_view s);

}  // namespace efa
