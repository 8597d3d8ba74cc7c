#pragma once

#include <cstddef>

#include "rescale/image.hpp"

namespace rescale::bicubic {

inline constexpr double kDefaultA = -0.5;

/// Keys cubic-convolution kernel with free parameter a.
double cubic_kernel(double a, double x);

/// Separable cubic convolution with a = -0.5, centre-aligned mapping
/// src = (dst + 0.5) * in / out - 0.5 and clamp-to-edge borders. Output is
/// clamped to [0,1].
GrayImage bicubic_resize(const GrayImage& img, std::size_t out_rows, std::size_t out_cols);

}  // namespace rescale::bicubic
