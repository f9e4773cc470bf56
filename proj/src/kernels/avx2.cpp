// Compiled with -mavx2 -mfma; only reached after a cpuid check.

#include <immintrin.h>

#include <algorithm>
#include <vector>

#include "kernels_internal.hpp"

namespace efa::kernels::detail {

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d sh = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

}  // namespace

void harmonic_sums_avx2(std::span<const double> cos_phase,
                        std::span<const double> sin_phase,
                        std::span<const double> wx, std::span<const double> wy,
                        int harmonics, std::span<double> out) {
  const std::size_t count = cos_phase.size();
  const std::size_t blocked = count - count % 4;
  // Four lanes per accumulator, four accumulators per harmonic.
  std::vector<double> acc(16 * static_cast<std::size_t>(harmonics), 0.0);

  for (std::size_t p = 0; p < blocked; p += 4) {
    const __m256d c1 = _mm256_loadu_pd(cos_phase.data() + p);
    const __m256d s1 = _mm256_loadu_pd(sin_phase.data() + p);
    const __m256d ux = _mm256_loadu_pd(wx.data() + p);
    const __m256d uy = _mm256_loadu_pd(wy.data() + p);
    __m256d zr = _mm256_set1_pd(1.0);
    __m256d zi = _mm256_setzero_pd();
    double* a = acc.data();
    for (int n = 0; n < harmonics; ++n, a += 16) {
      const __m256d r = _mm256_fmsub_pd(zr, c1, _mm256_mul_pd(zi, s1));
      zi = _mm256_fmadd_pd(zr, s1, _mm256_mul_pd(zi, c1));
      zr = r;
      _mm256_storeu_pd(a, _mm256_fmadd_pd(ux, zr, _mm256_loadu_pd(a)));
      _mm256_storeu_pd(a + 4, _mm256_fmadd_pd(ux, zi, _mm256_loadu_pd(a + 4)));
      _mm256_storeu_pd(a + 8, _mm256_fmadd_pd(uy, zr, _mm256_loadu_pd(a + 8)));
      _mm256_storeu_pd(a + 12, _mm256_fmadd_pd(uy, zi, _mm256_loadu_pd(a + 12)));
    }
  }

  for (std::size_t k = 0; k < 4 * static_cast<std::size_t>(harmonics); ++k)
    out[k] = hsum(_mm256_loadu_pd(acc.data() + 4 * k));

  if (blocked < count) {
    std::vector<double> tail(4 * static_cast<std::size_t>(harmonics));
    harmonic_sums_scalar(cos_phase.subspan(blocked), sin_phase.subspan(blocked),
                         wx.subspan(blocked), wy.subspan(blocked), harmonics,
                         tail);
    for (std::size_t k = 0; k < tail.size(); ++k) out[k] += tail[k];
  }
}

void evaluate_series_avx2(std::span<const double> coeffs, int harmonics,
                          double x0, double y0,
                          std::span<const double> cos_phase,
                          std::span<const double> sin_phase,
                          std::span<double> x, std::span<double> y) {
  const std::size_t count = cos_phase.size();
  const std::size_t blocked = count - count % 4;
  for (std::size_t j = 0; j < blocked; j += 4) {
    const __m256d c1 = _mm256_loadu_pd(cos_phase.data() + j);
    const __m256d s1 = _mm256_loadu_pd(sin_phase.data() + j);
    __m256d zr = _mm256_set1_pd(1.0);
    __m256d zi = _mm256_setzero_pd();
    __m256d sx = _mm256_set1_pd(x0);
    __m256d sy = _mm256_set1_pd(y0);
    for (int n = 0; n < harmonics; ++n) {
      const __m256d r = _mm256_fmsub_pd(zr, c1, _mm256_mul_pd(zi, s1));
      zi = _mm256_fmadd_pd(zr, s1, _mm256_mul_pd(zi, c1));
      zr = r;
      const double* h = coeffs.data() + 4 * n;
      sx = _mm256_fmadd_pd(_mm256_set1_pd(h[0]), zr, sx);
      sx = _mm256_fmadd_pd(_mm256_set1_pd(h[1]), zi, sx);
      sy = _mm256_fmadd_pd(_mm256_set1_pd(h[2]), zr, sy);
      sy = _mm256_fmadd_pd(_mm256_set1_pd(h[3]), zi, sy);
    }
    _mm256_storeu_pd(x.data() + j, sx);
    _mm256_storeu_pd(y.data() + j, sy);
  }
  if (blocked < count)
    evaluate_series_scalar(coeffs, harmonics, x0, y0,
                           cos_phase.subspan(blocked), sin_phase.subspan(blocked),
                           x.subspan(blocked), y.subspan(blocked));
}

void morph_row_avx2(MorphOp op, const std::uint8_t* above,
                    const std::uint8_t* row, const std::uint8_t* below,
                    std::uint8_t* out, std::size_t width) {
  const std::size_t blocked = width - width % 32;
  const bool erode = op == MorphOp::erode;
  auto combine = [erode](__m256i a, __m256i b) {
    return erode ? _mm256_min_epu8(a, b) : _mm256_max_epu8(a, b);
  };
  auto column = [&](std::size_t off) {
    auto load = [off](const std::uint8_t* r) {
      return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(r + off));
    };
    return combine(combine(load(above), load(row)), load(below));
  };
  for (std::size_t i = 0; i < blocked; i += 32) {
    const __m256i v = combine(combine(column(i), column(i + 1)), column(i + 2));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), v);
  }
  if (blocked < width)
    morph_row_scalar(op, above + blocked, row + blocked, below + blocked,
                     out + blocked, width - blocked);
}

}  // namespace efa::kernels::detail
