#include "rescale/image.hpp"

#include <algorithm>
#include <string>

namespace rescale {

GrayImage::GrayImage(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("GrayImage: dimensions must be positive");
  }
}

GrayImage::GrayImage(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("GrayImage: dimensions must be positive");
  }
  if (data_.size() != rows * cols) {
    throw std::invalid_argument("GrayImage: data length " + std::to_string(data_.size()) +
                                " does not match " + std::to_string(rows) + "x" +
                                std::to_string(cols));
  }
  // Negated comparison so NaN is rejected too.
  auto bad = std::find_if(data_.begin(), data_.end(),
                          [](double v) { return !(v >= 0.0 && v <= 1.0); });
  if (bad != data_.end()) {
    throw std::invalid_argument("GrayImage: value " + std::to_string(*bad) +
                                " outside [0,1]");
  }
}

double GrayImage::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) {
    throw std::out_of_range("GrayImage::at: index out of range");
  }
  return (*this)(r, c);
}

RgbImage::RgbImage(GrayImage r, GrayImage g, GrayImage b)
    : red(std::move(r)), green(std::move(g)), blue(std::move(b)) {
  if (red.rows() != green.rows() || red.rows() != blue.rows() ||
      red.cols() != green.cols() || red.cols() != blue.cols()) {
    throw std::invalid_argument("RgbImage: channel planes differ in size");
  }
}

GrayImage to_gray(const RgbImage& rgb) {
  const auto r = rgb.red.data();
  const auto g = rgb.green.data();
  const auto b = rgb.blue.data();
  std::vector<double> out(r.size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = std::clamp(0.299 * r[k] + 0.587 * g[k] + 0.114 * b[k], 0.0, 1.0);
  }
  return GrayImage(rgb.rows(), rgb.cols(), std::move(out));
}

}  // namespace rescale
