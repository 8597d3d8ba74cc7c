#include "rescale/fuzzy.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace rescale::fuzzy {

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
  if (!(0.0 <= lo && lo <= hi && hi <= 1.0)) {
    throw std::invalid_argument("Interval: need 0 <= lo <= hi <= 1, got [" +
                                std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

double k_alpha(const Interval& x, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("k_alpha: alpha outside [0,1]");
  }
  return x.lo() + alpha * x.width();
}

void FuzzyParams::validate() const {
  if (!(delta >= 0.0 && delta <= 1.0)) {
    throw std::invalid_argument("FuzzyParams: delta outside [0,1]");
  }
}

Block extract_block(const GrayImage& img, std::size_t i, std::size_t j, std::size_t p) {
  if (i >= img.rows() || j >= img.cols()) {
    throw std::out_of_range("extract_block: pixel outside image");
  }
  Block block;
  block.half_width = p;
  const std::size_t side = block.side();
  block.values.assign(side * side, 0.0);
  block.valid.assign(side * side, false);
  const auto rows = static_cast<std::ptrdiff_t>(img.rows());
  const auto cols = static_cast<std::ptrdiff_t>(img.cols());
  const auto pi = static_cast<std::ptrdiff_t>(p);
  for (std::size_t k = 0; k < side; ++k) {
    const auto r = static_cast<std::ptrdiff_t>(i) - pi + static_cast<std::ptrdiff_t>(k);
    if (r < 0 || r >= rows) continue;
    for (std::size_t l = 0; l < side; ++l) {
      const auto c = static_cast<std::ptrdiff_t>(j) - pi + static_cast<std::ptrdiff_t>(l);
      if (c < 0 || c >= cols) continue;
      block.values[k * side + l] = img(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
      block.valid[k * side + l] = true;
    }
  }
  return block;
}

double oscillation(const Block& block) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t k = 0; k < block.values.size(); ++k) {
    if (!block.valid[k]) continue;
    lo = std::min(lo, block.values[k]);
    hi = std::max(hi, block.values[k]);
  }
  return hi >= lo ? hi - lo : 0.0;
}

Interval membership_interval(double q, double omega, double delta) {
  const double width = delta * omega;
  const double lo = q * (1.0 - width);
  // lo + width can exceed 1 by an ulp; the exact value is <= 1.
  return Interval(lo, std::min(lo + width, 1.0));
}

GrayImage magnify(const GrayImage& img, const FuzzyParams& params) {
  params.validate();
  const std::size_t rows = img.rows();
  const std::size_t cols = img.cols();
  const std::size_t p = params.p;
  const std::size_t side = params.factor();
  const std::size_t out_cols = cols * side;
  std::vector<double> out(rows * side * out_cols);

  // Same neighbourhood as extract_block, read in place. Out-of-image entries
  // contribute v = 0 to the block but are skipped by the oscillation.
  for (std::size_t i = 0; i < rows; ++i) {
    const std::size_t r0 = i >= p ? i - p : 0;
    const std::size_t r1 = std::min(i + p, rows - 1);
    for (std::size_t j = 0; j < cols; ++j) {
      const std::size_t c0 = j >= p ? j - p : 0;
      const std::size_t c1 = std::min(j + p, cols - 1);
      double lo = 1.0, hi = 0.0;
      for (std::size_t r = r0; r <= r1; ++r) {
        for (std::size_t c = c0; c <= c1; ++c) {
          const double v = img(r, c);
          lo = std::min(lo, v);
          hi = std::max(hi, v);
        }
      }
      const double q = img(i, j);
      const double width = params.delta * (hi - lo);
      const double padded = q - q * width;  // v = 0

      for (std::size_t k = 0; k < side; ++k) {
        const auto r = static_cast<std::ptrdiff_t>(i + k) - static_cast<std::ptrdiff_t>(p);
        double* dst = out.data() + (i * side + k) * out_cols + j * side;
        if (r < 0 || r >= static_cast<std::ptrdiff_t>(rows)) {
          std::fill(dst, dst + side, padded);
          continue;
        }
        const auto src = img.row(static_cast<std::size_t>(r));
        for (std::size_t l = 0; l < side; ++l) {
          const auto c = static_cast<std::ptrdiff_t>(j + l) - static_cast<std::ptrdiff_t>(p);
          if (c < 0 || c >= static_cast<std::ptrdiff_t>(cols)) {
            dst[l] = padded;
          } else {
            const double v = src[static_cast<std::size_t>(c)];
            dst[l] = q + (v - q) * width;
          }
        }
      }
    }
  }
  return GrayImage(rows * side, out_cols, std::move(out));
}

}  // namespace rescale::fuzzy
