#include "efa/kernels/kernels.hpp"

#include <algorithm>

#include "kernels_internal.hpp"

namespace efa::kernels::detail {

void harmonic_sums_scalar(std::span<const double> cos_phase,
                          std::span<const double> sin_phase,
                          std::span<const double> wx,
                          std::span<const double> wy, int harmonics,
                          std::span<double> out) {
  std::fill(out.begin(), out.begin() + 4 * harmonics, 0.0);
  const std::size_t count = cos_phase.size();
  for (std::size_t p = 0; p < count; ++p) {
    const double c1 = cos_phase[p];
    const double s1 = sin_phase[p];
    const double ux = wx[p];
    const double uy = wy[p];
    // e^{i n phi} by repeated multiplication with e^{i phi}.
    double zr = 1.0;
    double zi = 0.0;
    double* acc = out.data();
    for (int n = 0; n < harmonics; ++n, acc += 4) {
      const double r = zr * c1 - zi * s1;
      zi = zr * s1 + zi * c1;
      zr = r;
      acc[0] += ux * zr;
      acc[1] += ux * zi;
      acc[2] += uy * zr;
      acc[3] += uy * zi;
    }
  }
}

void evaluate_series_scalar(std::span<const double> coeffs, int harmonics,
                            double x0, double y0,
                            std::span<const double> cos_phase,
                            std::span<const double> sin_phase,
                            std::span<double> x, std::span<double> y) {
  const std::size_t count = cos_phase.size();
  for (std::size_t j = 0; j < count; ++j) {
    const double c1 = cos_phase[j];
    const double s1 = sin_phase[j];
    double zr = 1.0;
    double zi = 0.0;
    double sx = x0;
    double sy = y0;
    for (int n = 0; n < harmonics; ++n) {
      const double r = zr * c1 - zi * s1;
      zi = zr * s1 + zi * c1;
      zr = r;
      const double* h = coeffs.data() + 4 * n;
      sx += h[0] * zr + h[1] * zi;
      sy += h[2] * zr + h[3] * zi;
    }
    x[j] = sx;
    y[j] = sy;
  }
}

void morph_row_scalar(MorphOp op, const std::uint8_t* above,
                      const std::uint8_t* row, const std::uint8_t* below,
                      std::uint8_t* out, std::size_t width) {
  if (op == MorphOp::erode) {
    for (std::size_t i = 0; i < width; ++i) {
      std::uint8_t v = 255;
      for (std::size_t k = i; k < i + 3; ++k)
        v = std::min({v, above[k], row[k], below[k]});
      out[i] = v;
    }
  } else {
    for (std::size_t i = 0; i < width; ++i) {
      std::uint8_t v = 0;
      for (std::size_t k = i; k < i + 3; ++k)
        v = std::max({v, above[k], row[k], below[k]});
      out[i] = v;
    }
  }
}

}  // namespace efa::kernels::detail
