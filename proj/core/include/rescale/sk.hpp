#pragma once

// Sampling-Kantorovich rescaling. The image is read as the step function f
// equal to q(i,j) on the unit square [i, i+1) x [j, j+1), mirrored across the
// image borders, and reconstructed as
//
//   (S_w f)(x) = sum_k chi(w x - k) * w^2 * integral of f over R_k^w,
//
// where R_k^w = [k1/w, (k1+1)/w] x [k2/w, (k2+1)/w].

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rescale/image.hpp"
#include "rescale/kernels.hpp"

namespace rescale::sk {

struct SkParams {
  double w = 25.0;             // sampling rate, >= 1
  Kernel2D kernel;             // product kernel chi
  double target_factor = 3.0;  // output size / input size

  /// Throws std::invalid_argument when w < 1 or target_factor <= 0.
  void validate() const;
};

/// Cell averages w^2 * integral of f over R_k^w for k1 in
/// [row_begin, row_begin + rows), k2 likewise.
struct SampleGrid {
  std::int64_t row_begin = 0;
  std::int64_t col_begin = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;

  double at(std::int64_t k1, std::int64_t k2) const {
    return values[static_cast<std::size_t>(k1 - row_begin) * cols +
                  static_cast<std::size_t>(k2 - col_begin)];
  }
};

/// Maps any integer pixel coordinate onto [0, n) by mirror reflection of the
/// step function about 0 and n (edge pixels repeat: -1 -> 0, n -> n-1).
std::size_t mirror_index(std::int64_t p, std::size_t n);

/// Exact averages of the mirrored step function over every cell that meets
/// [-margin/w, ceil(w n)/w + margin/w] x (same for columns). Each value is
/// the area-weighted sum of the at most 2x2 pixels the cell overlaps.
SampleGrid cell_averages(const GrayImage& img, double w, std::size_t margin_cells = 0);

struct SkResult {
  GrayImage image;
  double max_overshoot = 0.0;  // largest excursion outside [0,1] before clamping
};

/// Evaluates S_w f at the target-pixel centres ((i' + 0.5)/R, (j' + 0.5)/R)
/// of a round(R rows) x round(R cols) grid. The sum over k is restricted to
/// |w x_d - k_d| <= support radius on each axis and evaluated as two 1-D
/// passes; results are clamped to [0,1].
SkResult sk_rescale_with_stats(const GrayImage& img, const SkParams& params);

GrayImage sk_rescale(const GrayImage& img, const SkParams& params);

}  // namespace rescale::sk
