#pragma once

#include <optional>
#include <string>
#include <vector>

#include "efa/contour.hpp"
#include "efa/efd.hpp"
#include "efa/segment.hpp"

namespace efa {

enum class EdgeMethod { none, sobel };

struct ExtractOptions {
  bool invert = false;
  int enhance = 0;  // repeated applications
  int erode = 0;
  int dilate = 0;
  std::optional<Pixel> seed;  // raster col/row; largest component when empty
  EdgeMethod edge = EdgeMethod::none;
  double edge_threshold = 0.0;
  Calibration calibration;
};

/// Boundaries shorter than this are rejected as DegenerateBoundary.
inline constexpr std::size_t kMinBoundaryPixels = 8;

struct Extraction {
  Raster gray;
  BinaryMask mask;  // selected component
  int threshold = -1;  // Otsu threshold, -1 on the edge path
  std::vector<Pixel> boundary;  // y-up
  ChainCode chain;
  PolyContour contour;
  double area = 0.0;       // calibrated units^2
  double perimeter = 0.0;  // calibrated units
};

/// Grayscale -> [invert] -> [enhance xN] -> Otsu or Sobel -> [erode] -> [dilate]
/// -> component selection -> border following -> chain code.
Extraction extract_contour(const RgbRaster& image, const ExtractOptions& opt);

/// Contour drawn over the image frame (raster orientation).
std::string extraction_svg(const Extraction& x, const std::string& label);

/// Reconstructions for each entry of `orders`, drawn in the given order with
/// a fixed palette. Throws HarmonicOutOfRange for orders above e.order().
std::string reconstruction_svg(const EfdSet& e, const std::vector<int>& orders,
                               int samples = kDefaultReconstructionSamples);

}  // namespace efa
