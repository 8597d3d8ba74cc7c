#include "rescale/bicubic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace rescale::bicubic {

double cubic_kernel(double a, double x) {
  const double t = std::abs(x);
  if (t <= 1.0) return ((a + 2.0) * t - (a + 3.0)) * t * t + 1.0;
  if (t < 2.0) return ((a * t - 5.0 * a) * t + 8.0 * a) * t - 4.0 * a;
  return 0.0;
}

namespace {

struct Taps {
  std::array<std::size_t, 4> index;
  std::array<double, 4> weight;
};

std::vector<Taps> axis_taps(std::size_t n_in, std::size_t n_out) {
  std::vector<Taps> taps(n_out);
  const double scale = static_cast<double>(n_in) / static_cast<double>(n_out);
  const auto last = static_cast<std::ptrdiff_t>(n_in) - 1;
  for (std::size_t o = 0; o < n_out; ++o) {
    const double src = (static_cast<double>(o) + 0.5) * scale - 0.5;
    const double base = std::floor(src);
    const double frac = src - base;
    for (int k = 0; k < 4; ++k) {
      const auto p = static_cast<std::ptrdiff_t>(base) - 1 + k;
      taps[o].index[k] = static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(p, 0, last));
      taps[o].weight[k] = cubic_kernel(kDefaultA, frac - (k - 1));
    }
  }
  return taps;
}

}  // namespace

GrayImage bicubic_resize(const GrayImage& img, std::size_t out_rows, std::size_t out_cols) {
  if (out_rows == 0 || out_cols == 0) {
    throw std::invalid_argument("bicubic_resize: output dimensions must be positive");
  }
  const auto row_taps = axis_taps(img.rows(), out_rows);
  const auto col_taps = axis_taps(img.cols(), out_cols);

  // Horizontal pass first (rows x out_cols), then vertical.
  const std::size_t rows = img.rows();
  std::vector<double> partial(rows * out_cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto src = img.row(r);
    double* dst = partial.data() + r * out_cols;
    for (std::size_t c = 0; c < out_cols; ++c) {
      const auto& t = col_taps[c];
      dst[c] = t.weight[0] * src[t.index[0]] + t.weight[1] * src[t.index[1]] +
               t.weight[2] * src[t.index[2]] + t.weight[3] * src[t.index[3]];
    }
  }
  std::vector<double> out(out_rows * out_cols);
  for (std::size_t r = 0; r < out_rows; ++r) {
    const auto& t = row_taps[r];
    const double* s0 = partial.data() + t.index[0] * out_cols;
    const double* s1 = partial.data() + t.index[1] * out_cols;
    const double* s2 = partial.data() + t.index[2] * out_cols;
    const double* s3 = partial.data() + t.index[3] * out_cols;
    double* dst = out.data() + r * out_cols;
    for (std::size_t c = 0; c < out_cols; ++c) {
      const double v =
          t.weight[0] * s0[c] + t.weight[1] * s1[c] + t.weight[2] * s2[c] + t.weight[3] * s3[c];
      dst[c] = std::clamp(v, 0.0, 1.0);
    }
  }
  return GrayImage(out_rows, out_cols, std::move(out));
}

}  // namespace rescale::bicubic
