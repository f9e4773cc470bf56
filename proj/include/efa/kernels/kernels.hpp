#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

// Data-parallel inner loops. Each kernel has a scalar reference version and,
// on x86-64, an AVX2/FMA version; the active table is chosen at startup from
// cpuid and can be overridden with select().

namespace efa::kernels {

enum class Backend { scalar, avx2 };

std::string_view to_string(Backend b);

/// For each harmonic n = 1..harmonics accumulates, over segments p,
///   out[4(n-1)+0] = sum wx[p] cos(n phi_p)    out[4(n-1)+1] = sum wx[p] sin(n phi_p)
///   out[4(n-1)+2] = sum wy[p] cos(n phi_p)    out[4(n-1)+3] = sum wy[p] sin(n phi_p)
/// where cos_phase[p] = cos(phi_p), sin_phase[p] = sin(phi_p).
using HarmonicSumsFn = void (*)(std::span<const double> cos_phase,
                                std::span<const double> sin_phase,
                                std::span<const double> wx,
                                std::span<const double> wy, int harmonics,
                                std::span<double> out);

/// Evaluates x(j) = x0 + sum_n coeffs[4(n-1)] cos(n th_j) + coeffs[4(n-1)+1] sin(n th_j)
/// and y(j) likewise with coeffs[4(n-1)+2], coeffs[4(n-1)+3], for n = 1..harmonics.
using EvaluateSeriesFn = void (*)(std::span<const double> coeffs, int harmonics,
                                  double x0, double y0,
                                  std::span<const double> cos_phase,
                                  std::span<const double> sin_phase,
                                  std::span<double> x, std::span<double> y);

enum class MorphOp { erode, dilate };

/// One output row of a 3x3 min (erode) or max (dilate) filter. The three
/// input rows are padded: they hold width + 2 bytes, out holds width bytes.
using MorphRowFn = void (*)(MorphOp op, const std::uint8_t* above,
                            const std::uint8_t* row, const std::uint8_t* below,
                            std::uint8_t* out, std::size_t width);

struct KernelTable {
  Backend backend;
  HarmonicSumsFn harmonic_sums;
  EvaluateSeriesFn evaluate_series;
  MorphRowFn morph_row;
};

const KernelTable& scalar_table();
bool available(Backend b);
const KernelTable& table(Backend b);

/// Currently selected table.
const KernelTable& active();
Backend active_backend();
/// Throws efa::Error(BadParameter) if the backend is not available here.
void select(Backend b);

}  // namespace efa::kernels
