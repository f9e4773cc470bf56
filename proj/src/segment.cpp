#include "efa/segment.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>

#include "efa/error.hpp"
#include "efa/kernels/kernels.hpp"

namespace efa {

Raster::Raster(int width, int height, std::uint8_t fill)
    : width_(width), height_(height),
      pixels_(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill) {
  if (width <= 0 || height <= 0)
    throw Error(ErrorCode::BadParameter, "raster dimensions must be positive");
}

Raster::Raster(int width, int height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width <= 0 || height <= 0 ||
      pixels_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height))
    throw Error(ErrorCode::BadParameter, "raster size does not match its pixel count");
}

BinaryMask::BinaryMask(int width, int height)
    : width_(width), height_(height),
      bits_(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), 0) {
  if (width <= 0 || height <= 0)
    throw Error(ErrorCode::BadParameter, "mask dimensions must be positive");
}

std::size_t BinaryMask::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

BinaryMask BinaryMask::complement() const {
  BinaryMask r = *this;
  for (auto& b : r.bits_) b = b ? 0 : 1;
  return r;
}

Raster to_grayscale(const RgbRaster& rgb) {
  std::vector<std::uint8_t> px(rgb.pixels.size());
  for (std::size_t i = 0; i < px.size(); ++i) {
    const Rgb& c = rgb.pixels[i];
    const double luma = 0.299 * c.r + 0.587 * c.g + 0.114 * c.b;
    px[i] = static_cast<std::uint8_t>(std::clamp(std::lround(luma), 0L, 255L));
  }
  return Raster(rgb.width, rgb.height, std::move(px));
}

Raster invert(const Raster& r) {
  std::vector<std::uint8_t> px = r.pixels();
  for (auto& v : px) v = static_cast<std::uint8_t>(255 - v);
  return Raster(r.width(), r.height(), std::move(px));
}

std::vector<std::uint64_t> histogram(const Raster& r) {
  std::vector<std::uint64_t> h(256, 0);
  for (auto v : r.pixels()) ++h[v];
  return h;
}

Raster enhance(const Raster& r) {
  const auto hist = histogram(r);
  const double total = static_cast<double>(r.pixels().size());
  auto percentile = [&](double q) {
    double cum = 0.0;
    for (int v = 0; v < 256; ++v) {
      cum += static_cast<double>(hist[v]);
      if (cum >= q * total) return v;
    }
    return 255;
  };
  const int lo = percentile(0.01);
  const int hi = percentile(0.99);
  if (hi <= lo) return r;
  std::array<std::uint8_t, 256> lut{};
  for (int v = 0; v < 256; ++v) {
    const double s = (v - lo) * 255.0 / (hi - lo);
    lut[v] = static_cast<std::uint8_t>(std::clamp(std::lround(s), 0L, 255L));
  }
  std::vector<std::uint8_t> px = r.pixels();
  for (auto& v : px) v = lut[v];
  return Raster(r.width(), r.height(), std::move(px));
}

int otsu_threshold_from_histogram(const std::vector<std::uint64_t>& hist) {
  double total = 0.0;
  double sum = 0.0;
  int distinct = 0;
  for (int v = 0; v < 256; ++v) {
    total += static_cast<double>(hist[v]);
    sum += static_cast<double>(v) * static_cast<double>(hist[v]);
    distinct += hist[v] > 0;
  }
  if (distinct < 2)
    throw Error(ErrorCode::FlatImage, "image has a single intensity; nothing to threshold");

  // between-class variance * total^2 = (total*sum0 - w0*sum)^2 / (w0 (total - w0))
  double w0 = 0.0;
  double sum0 = 0.0;
  double best = -1.0;
  int best_k = 0;
  for (int k = 0; k < 255; ++k) {
    w0 += static_cast<double>(hist[k]);
    sum0 += static_cast<double>(k) * static_cast<double>(hist[k]);
    const double w1 = total - w0;
    if (w0 == 0.0 || w1 == 0.0) continue;
    const double diff = total * sum0 - w0 * sum;
    const double between = diff * diff / (w0 * w1);
    if (between > best) {
      best = between;
      best_k = k;
    }
  }
  return best_k;
}

OtsuResult otsu_threshold(const Raster& r) {
  OtsuResult res;
  res.threshold = otsu_threshold_from_histogram(histogram(r));
  res.mask = BinaryMask(r.width(), r.height());
  auto& bits = res.mask.bytes();
  for (std::size_t i = 0; i < bits.size(); ++i)
    bits[i] = r.pixels()[i] > res.threshold ? 1 : 0;
  return res;
}

namespace {

BinaryMask morph(const BinaryMask& m, kernels::MorphOp op, int iterations) {
  if (iterations < 1)
    throw Error(ErrorCode::BadParameter, "morphology iterations must be >= 1");
  const auto w = static_cast<std::size_t>(m.width());
  const auto h = static_cast<std::size_t>(m.height());
  const std::size_t pw = w + 2;
  // One-pixel background frame around the image.
  std::vector<std::uint8_t> padded(pw * (h + 2), 0);
  BinaryMask out = m;
  const auto row_fn = kernels::active().morph_row;
  for (int it = 0; it < iterations; ++it) {
    for (std::size_t r = 0; r < h; ++r)
      std::copy_n(out.bytes().data() + r * w, w, padded.data() + (r + 1) * pw + 1);
    for (std::size_t r = 0; r < h; ++r)
      row_fn(op, padded.data() + r * pw, padded.data() + (r + 1) * pw,
             padded.data() + (r + 2) * pw, out.bytes().data() + r * w, w);
  }
  return out;
}

constexpr std::array<int, 8> kDc = {1, 1, 0, -1, -1, -1, 0, 1};
constexpr std::array<int, 8> kDr = {0, -1, -1, -1, 0, 1, 1, 1};

}  // namespace

BinaryMask erode(const BinaryMask& m, int iterations) {
  return morph(m, kernels::MorphOp::erode, iterations);
}

BinaryMask dilate(const BinaryMask& m, int iterations) {
  return morph(m, kernels::MorphOp::dilate, iterations);
}

Components label_components(const BinaryMask& m) {
  Components c;
  const int w = m.width();
  const int h = m.height();
  c.labels.assign(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), 0);
  auto idx = [w](int col, int row) {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(w) +
           static_cast<std::size_t>(col);
  };
  std::deque<Pixel> queue;
  for (int row = 0; row < h; ++row) {
    for (int col = 0; col < w; ++col) {
      if (!m.get(col, row) || c.labels[idx(col, row)] != 0) continue;
      const int label = c.count() + 1;
      std::size_t size = 0;
      c.labels[idx(col, row)] = label;
      queue.push_back({col, row});
      while (!queue.empty()) {
        const Pixel p = queue.front();
        queue.pop_front();
        ++size;
        for (int k = 0; k < 8; ++k) {
          const int nc = p.x + kDc[k];
          const int nr = p.y + kDr[k];
          if (!m.in_bounds(nc, nr) || !m.get(nc, nr) || c.labels[idx(nc, nr)] != 0)
            continue;
          c.labels[idx(nc, nr)] = label;
          queue.push_back({nc, nr});
        }
      }
      c.sizes.push_back(size);
    }
  }
  return c;
}

BinaryMask select_component(const BinaryMask& m, std::optional<Pixel> seed) {
  const Components comps = label_components(m);
  if (comps.count() == 0) throw Error(ErrorCode::EmptyMask, "mask has no foreground");
  int keep = 0;
  if (seed) {
    if (!m.in_bounds(seed->x, seed->y) || !m.get(seed->x, seed->y))
      throw Error(ErrorCode::SeedOnBackground,
                  "seed (" + std::to_string(seed->x) + "," + std::to_string(seed->y) +
                      ") is not on a foreground pixel");
    keep = comps.labels[static_cast<std::size_t>(seed->y) *
                            static_cast<std::size_t>(m.width()) +
                        static_cast<std::size_t>(seed->x)];
  } else {
    keep = 1 + static_cast<int>(std::max_element(comps.sizes.begin(), comps.sizes.end()) -
                                comps.sizes.begin());
  }
  BinaryMask out(m.width(), m.height());
  for (std::size_t i = 0; i < comps.labels.size(); ++i)
    out.bytes()[i] = comps.labels[i] == keep ? 1 : 0;
  return out;
}

std::vector<Pixel> border_follow(const BinaryMask& m) {
  const Components comps = label_components(m);
  if (comps.count() == 0) throw Error(ErrorCode::EmptyMask, "mask has no foreground");
  if (comps.count() > 1)
    throw Error(ErrorCode::MultipleComponents,
                "mask holds " + std::to_string(comps.count()) +
                    " components; select one first");

  auto fg = [&m](int col, int row) { return m.in_bounds(col, row) && m.get(col, row); };

  // First foreground pixel in raster order; its west neighbour is background.
  Pixel start{-1, -1};
  for (int row = 0; row < m.height() && start.x < 0; ++row)
    for (int col = 0; col < m.width(); ++col)
      if (m.get(col, row)) {
        start = {col, row};
        break;
      }

  // Directions are indexed as Freeman codes in the y-up frame, so increasing
  // index turns anticlockwise on screen with y pointing up.
  auto dir_between = [](Pixel from, Pixel to) {
    for (int k = 0; k < 8; ++k)
      if (from.x + kDc[k] == to.x && from.y + kDr[k] == to.y) return k;
    return -1;
  };
  auto step = [](Pixel p, int k) { return Pixel{p.x + kDc[k], p.y + kDr[k]}; };

  // Clockwise scan from the west neighbour for the first foreground pixel.
  int first_dir = -1;
  for (int i = 0; i < 8; ++i) {
    const int k = ((4 - i) % 8 + 8) % 8;
    const Pixel q = step(start, k);
    if (fg(q.x, q.y)) {
      first_dir = k;
      break;
    }
  }
  if (first_dir < 0)
    throw Error(ErrorCode::DegenerateBoundary,
                "isolated pixel at (" + std::to_string(start.x) + "," +
                    std::to_string(m.height() - 1 - start.y) + ") has no boundary chain");

  const Pixel first_neighbour = step(start, first_dir);
  std::vector<Pixel> raster_path;
  Pixel prev = first_neighbour;
  Pixel cur = start;
  while (true) {
    raster_path.push_back(cur);
    // Anticlockwise scan around cur starting just after prev.
    const int back = dir_between(cur, prev);
    Pixel next = cur;
    for (int i = 1; i <= 8; ++i) {
      const int k = (back + i) % 8;
      const Pixel q = step(cur, k);
      if (fg(q.x, q.y)) {
        next = q;
        break;
      }
    }
    if (next == start && cur == first_neighbour) break;
    prev = cur;
    cur = next;
  }

  std::vector<Pixel> out;
  out.reserve(raster_path.size());
  for (const Pixel& p : raster_path) out.push_back(to_y_up(p.x, p.y, m.height()));
  return out;
}

BinaryMask sobel_edges(const Raster& r, double threshold) {
  if (!(threshold >= 0.0))
    throw Error(ErrorCode::BadParameter, "edge threshold must be non-negative");
  const int w = r.width();
  const int h = r.height();
  auto px = [&](int col, int row) {
    return static_cast<int>(r.at(std::clamp(col, 0, w - 1), std::clamp(row, 0, h - 1)));
  };
  BinaryMask out(w, h);
  for (int row = 0; row < h; ++row) {
    for (int col = 0; col < w; ++col) {
      const int gx = (px(col + 1, row - 1) + 2 * px(col + 1, row) + px(col + 1, row + 1)) -
                     (px(col - 1, row - 1) + 2 * px(col - 1, row) + px(col - 1, row + 1));
      const int gy = (px(col - 1, row + 1) + 2 * px(col, row + 1) + px(col + 1, row + 1)) -
                     (px(col - 1, row - 1) + 2 * px(col, row - 1) + px(col + 1, row - 1));
      const double mag = std::sqrt(static_cast<double>(gx) * gx + static_cast<double>(gy) * gy);
      out.set(col, row, mag > threshold);
    }
  }
  return out;
}

}  // namespace efa
