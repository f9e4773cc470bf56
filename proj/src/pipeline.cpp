#include "efa/pipeline.hpp"

#include <algorithm>
#include <cmath>

#include "efa/error.hpp"
#include "efa/svg.hpp"
#include "efa/text_io.hpp"

namespace efa {

Extraction extract_contour(const RgbRaster& image, const ExtractOptions& opt) {
  Raster gray = to_grayscale(image);
  if (opt.invert) gray = invert(gray);
  for (int i = 0; i < opt.enhance; ++i) gray = enhance(gray);

  BinaryMask mask;
  int threshold = -1;
  if (opt.edge == EdgeMethod::sobel) {
    mask = sobel_edges(gray, opt.edge_threshold);
  } else {
    auto otsu = otsu_threshold(gray);
    threshold = otsu.threshold;
    mask = std::move(otsu.mask);
  }
  if (opt.erode > 0) mask = erode(mask, opt.erode);
  if (opt.dilate > 0) mask = dilate(mask, opt.dilate);
  mask = select_component(mask, opt.seed);

  std::vector<Pixel> boundary = border_follow(mask);
  if (boundary.size() < kMinBoundaryPixels) {
    const Pixel at = to_raster(boundary.front(), mask.height());
    throw Error(ErrorCode::DegenerateBoundary,
                "boundary has only " + std::to_string(boundary.size()) +
                    " pixels (starting at col " + std::to_string(at.x) + ", row " +
                    std::to_string(at.y) + ")");
  }
  ChainCode chain = contour_to_chain(boundary);
  if (!chain.is_closed())
    throw Error(ErrorCode::NotClosed, "traced boundary does not close");
  PolyContour contour = chain_to_contour(chain);

  Extraction x{std::move(gray), std::move(mask), threshold, std::move(boundary),
               std::move(chain), std::move(contour), 0.0, 0.0};
  x.area = area(x.contour, opt.calibration);
  x.perimeter = perimeter(x.chain, opt.calibration);
  return x;
}

std::string extraction_svg(const Extraction& x, const std::string& label) {
  const int w = x.gray.width();
  const int h = x.gray.height();
  const double longest = std::max(w, h);
  const int cw = static_cast<int>(std::lround(800.0 * w / longest)) + 40;
  const int ch = static_cast<int>(std::lround(800.0 * h / longest)) + 40;
  SvgCanvas svg(cw, ch, 20.0);
  svg.raster_frame(w, h);
  svg.rect_frame("#888");
  std::vector<Point> pts;
  pts.reserve(x.boundary.size());
  for (const Pixel& p : x.boundary) {
    const Pixel r = to_raster(p, h);
    pts.push_back({r.x + 0.5, r.y + 0.5});
  }
  svg.polyline(pts, "#00a000", 1.5, true);
  svg.text(0.5 * cw, 14.0, label, 12);
  return svg.str();
}

std::string reconstruction_svg(const EfdSet& e, const std::vector<int>& orders, int samples) {
  std::vector<std::vector<Point>> curves;
  std::vector<Point> all;
  for (int n : orders) {
    curves.push_back(reconstruct(e, n, samples));
    all.insert(all.end(), curves.back().begin(), curves.back().end());
  }
  SvgCanvas svg(640, 640, 40.0);
  svg.fit(all);
  for (std::size_t i = 0; i < curves.size(); ++i) {
    svg.polyline(curves[i], palette_color(i), 1.5, true);
    svg.legend_entry(i, "N=" + std::to_string(orders[i]), palette_color(i));
  }
  return svg.str();
}

}  // namespace efa
