#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <variant>

#include "rescale/image.hpp"

namespace rescale {

enum class ImageIoErrc {
  unreadable,          // missing file or read failure
  unsupported_format,  // unknown magic/extension, alpha channel, ...
  unsupported_depth,   // anything other than 8 bits per sample
  malformed,           // truncated or inconsistent header/data
  unwritable,
};

const char* to_string(ImageIoErrc code) noexcept;

class ImageIoError : public std::runtime_error {
 public:
  ImageIoError(ImageIoErrc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ImageIoErrc code() const noexcept { return code_; }

 private:
  ImageIoErrc code_;
};

using AnyImage = std::variant<GrayImage, RgbImage>;

/// Reads an 8-bit PGM (P2/P5) or PNG (greyscale or RGB) file, dividing
/// samples by 255. The format is detected from the file contents.
AnyImage load_image(const std::filesystem::path& path);

/// Like load_image, but converts colour input to grey with to_gray().
GrayImage load_gray(const std::filesystem::path& path);

/// Writes an 8-bit PGM (P5) or greyscale PNG, chosen by extension.
/// Samples are scaled by 255 and rounded half-up.
void save_image(const GrayImage& img, const std::filesystem::path& path);

/// Quantizes one normalized sample to a byte, rounding half-up.
unsigned char quantize(double v) noexcept;

/// Decimation by `factor` keeping the centre sample of every block:
/// out(i,j) = in(i*R + R/2, j*R + R/2). Throws std::invalid_argument unless
/// both dimensions are multiples of `factor`.
GrayImage downscale_nearest(const GrayImage& img, std::size_t factor);

/// Crops to the largest multiples of `factor`, keeping the top-left corner.
GrayImage crop_to_multiple(const GrayImage& img, std::size_t factor);

}  // namespace rescale
