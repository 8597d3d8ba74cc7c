#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace rescale {

/// Greyscale image with luminances normalized to [0,1], stored row-major.
class GrayImage {
 public:
  GrayImage() = default;

  /// Zero-filled image. Throws std::invalid_argument on a zero dimension.
  GrayImage(std::size_t rows, std::size_t cols);

  /// Takes ownership of `data`. Throws std::invalid_argument if the size
  /// does not match or any value lies outside [0,1].
  GrayImage(std::size_t rows, std::size_t cols, std::vector<double> data);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }

  double operator()(std::size_t r, std::size_t c) const noexcept {
    return data_[r * cols_ + c];
  }
  double at(std::size_t r, std::size_t c) const;

  std::span<const double> data() const noexcept { return data_; }
  std::span<const double> row(std::size_t r) const noexcept {
    return {data_.data() + r * cols_, cols_};
  }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Three equally sized channel planes.
struct RgbImage {
  GrayImage red;
  GrayImage green;
  GrayImage blue;

  RgbImage() = default;
  RgbImage(GrayImage r, GrayImage g, GrayImage b);

  std::size_t rows() const noexcept { return red.rows(); }
  std::size_t cols() const noexcept { return red.cols(); }
};

/// Rec. 601 luma: 0.299 R + 0.587 G + 0.114 B.
GrayImage to_gray(const RgbImage& rgb);

/// Applies a plane-wise operation to each channel independently.
template <typename Fn>
RgbImage map_channels(const RgbImage& rgb, Fn&& fn) {
  return RgbImage(fn(rgb.red), fn(rgb.green), fn(rgb.blue));
}

}  // namespace rescale
