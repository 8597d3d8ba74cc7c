#include "rescale/sk.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rescale::sk {

namespace {

struct Overlap {
  std::int64_t pixel;
  double weight;  // w * |cell intersect pixel|
};

// Unit pixels [p, p+1) overlapped by the cell [k/w, (k+1)/w]; at most two
// since w >= 1.
template <typename Fn>
void for_each_overlap(std::int64_t k, double w, Fn&& fn) {
  const double lo = static_cast<double>(k) / w;
  const double hi = static_cast<double>(k + 1) / w;
  for (auto p = static_cast<std::int64_t>(std::floor(lo)); static_cast<double>(p) < hi; ++p) {
    const double overlap =
        std::min(hi, static_cast<double>(p + 1)) - std::max(lo, static_cast<double>(p));
    if (overlap > 0.0) fn(Overlap{p, overlap * w});
  }
}

// Sparse row of a 1-D resampling operator: out[o] = sum taps.weight * in[taps.index].
struct Tap {
  std::size_t index;
  double weight;
};
using Operator1D = std::vector<std::vector<Tap>>;

// For each output sample o at x = (o + 0.5) / factor, folds
// sum_k chi(w x - k) * (cell-average weights of f) onto source pixels.
Operator1D build_axis(std::size_t n_in, std::size_t n_out, double factor, double w,
                      const Kernel1D& kernel) {
  Operator1D op(n_out);
  const double radius = kernel.support_radius();
  std::vector<double> dense(n_in);
  std::vector<std::size_t> touched;
  for (std::size_t o = 0; o < n_out; ++o) {
    const double u = w * (static_cast<double>(o) + 0.5) / factor;
    const auto k_lo = static_cast<std::int64_t>(std::ceil(u - radius));
    const auto k_hi = static_cast<std::int64_t>(std::floor(u + radius));
    touched.clear();
    for (std::int64_t k = k_lo; k <= k_hi; ++k) {
      const double kv = kernel(u - static_cast<double>(k));
      if (kv == 0.0) continue;
      for_each_overlap(k, w, [&](const Overlap& ov) {
        const std::size_t idx = mirror_index(ov.pixel, n_in);
        if (dense[idx] == 0.0) touched.push_back(idx);
        dense[idx] += kv * ov.weight;
      });
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    auto& taps = op[o];
    taps.reserve(touched.size());
    for (auto idx : touched) {
      taps.push_back({idx, dense[idx]});
      dense[idx] = 0.0;
    }
  }
  return op;
}

std::size_t scaled_dim(std::size_t n, double factor) {
  const auto out = static_cast<std::size_t>(std::llround(factor * static_cast<double>(n)));
  return std::max<std::size_t>(out, 1);
}

}  // namespace

void SkParams::validate() const {
  if (!(w >= 1.0)) throw std::invalid_argument("SkParams: w must be >= 1");
  if (!(target_factor > 0.0)) {
    throw std::invalid_argument("SkParams: target_factor must be positive");
  }
}

std::size_t mirror_index(std::int64_t p, std::size_t n) {
  const auto period = static_cast<std::int64_t>(2 * n);
  std::int64_t r = p % period;
  if (r < 0) r += period;
  return r < static_cast<std::int64_t>(n) ? static_cast<std::size_t>(r)
                                          : static_cast<std::size_t>(period - 1 - r);
}

SampleGrid cell_averages(const GrayImage& img, double w, std::size_t margin_cells) {
  if (!(w >= 1.0)) throw std::invalid_argument("cell_averages: w must be >= 1");
  const auto margin = static_cast<std::int64_t>(margin_cells);
  auto span = [&](std::size_t n) {
    return static_cast<std::int64_t>(std::ceil(w * static_cast<double>(n)));
  };
  SampleGrid grid;
  grid.row_begin = -margin;
  grid.col_begin = -margin;
  grid.rows = static_cast<std::size_t>(span(img.rows()) + 2 * margin);
  grid.cols = static_cast<std::size_t>(span(img.cols()) + 2 * margin);
  grid.values.assign(grid.rows * grid.cols, 0.0);

  std::vector<std::vector<Overlap>> col_overlaps(grid.cols);
  for (std::size_t c = 0; c < grid.cols; ++c) {
    for_each_overlap(grid.col_begin + static_cast<std::int64_t>(c), w,
                     [&](const Overlap& ov) { col_overlaps[c].push_back(ov); });
  }
  for (std::size_t r = 0; r < grid.rows; ++r) {
    const auto k1 = grid.row_begin + static_cast<std::int64_t>(r);
    for_each_overlap(k1, w, [&](const Overlap& row_ov) {
      const auto src = img.row(mirror_index(row_ov.pixel, img.rows()));
      double* dst = grid.values.data() + r * grid.cols;
      for (std::size_t c = 0; c < grid.cols; ++c) {
        double acc = 0.0;
        for (const auto& col_ov : col_overlaps[c]) {
          acc += col_ov.weight * src[mirror_index(col_ov.pixel, img.cols())];
        }
        dst[c] += row_ov.weight * acc;
      }
    });
  }
  return grid;
}

SkResult sk_rescale_with_stats(const GrayImage& img, const SkParams& params) {
  params.validate();
  const std::size_t out_rows = scaled_dim(img.rows(), params.target_factor);
  const std::size_t out_cols = scaled_dim(img.cols(), params.target_factor);
  const auto row_op =
      build_axis(img.rows(), out_rows, params.target_factor, params.w, params.kernel.kx);
  const auto col_op =
      build_axis(img.cols(), out_cols, params.target_factor, params.w, params.kernel.ky);

  // Row pass: out_rows x cols.
  const std::size_t cols = img.cols();
  std::vector<double> partial(out_rows * cols, 0.0);
  for (std::size_t o = 0; o < out_rows; ++o) {
    double* dst = partial.data() + o * cols;
    for (const auto& tap : row_op[o]) {
      const auto src = img.row(tap.index);
      for (std::size_t c = 0; c < cols; ++c) dst[c] += tap.weight * src[c];
    }
  }

  // Column pass, clamping as we go.
  std::vector<double> out(out_rows * out_cols);
  double overshoot = 0.0;
  for (std::size_t o = 0; o < out_rows; ++o) {
    const double* src = partial.data() + o * cols;
    double* dst = out.data() + o * out_cols;
    for (std::size_t oc = 0; oc < out_cols; ++oc) {
      double acc = 0.0;
      for (const auto& tap : col_op[oc]) acc += tap.weight * src[tap.index];
      overshoot = std::max({overshoot, acc - 1.0, -acc});
      dst[oc] = std::clamp(acc, 0.0, 1.0);
    }
  }
  return {GrayImage(out_rows, out_cols, std::move(out)), overshoot};
}

GrayImage sk_rescale(const GrayImage& img, const SkParams& params) {
  return sk_rescale_with_stats(img, params).image;
}

}  // namespace rescale::sk
