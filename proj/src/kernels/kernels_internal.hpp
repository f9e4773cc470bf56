#pragma once

#include "efa/kernels/kernels.hpp"

namespace efa::kernels::detail {

void harmonic_sums_scalar(std::span<const double>, std::span<const double>,
                          std::span<const double>, std::span<const double>,
                          int, std::span<double>);
void evaluate_series_scalar(std::span<const double>, int, double, double,
                            std::span<const double>, std::span<const double>,
                            std::span<double>, std::span<double>);
void morph_row_scalar(MorphOp, const std::uint8_t*, const std::uint8_t*,
                      const std::uint8_t*, std::uint8_t*, std::size_t);

#if defined(EFA_HAVE_AVX2)
void harmonic_sums_avx2(std::span<const double>, std::span<const double>,
                        std::span<const double>, std::span<const double>, int,
                        std::span<double>);
void evaluate_series_avx2(std::span<const double>, int, double, double,
                          std::span<const double>, std::span<const double>,
                          std::span<double>, std::span<double>);
void morph_row_avx2(MorphOp, const std::uint8_t*, const std::uint8_t*,
                    const std::uint8_t*, std::uint8_t*, std::size_t);
#endif

}  // namespace efa::kernels::detail
