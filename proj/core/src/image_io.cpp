#include "rescale/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <vector>

namespace rescale {

namespace fs = std::filesystem;

const char* to_string(ImageIoErrc code) noexcept {
  switch (code) {
    case ImageIoErrc::unreadable: return "unreadable";
    case ImageIoErrc::unsupported_format: return "unsupported format";
    case ImageIoErrc::unsupported_depth: return "unsupported bit depth";
    case ImageIoErrc::malformed: return "malformed";
    case ImageIoErrc::unwritable: return "unwritable";
  }
  return "unknown";
}

namespace {

[[noreturn]] void fail(ImageIoErrc code, const fs::path& path, const std::string& msg) {
  throw ImageIoError(code, path.string() + ": " + msg);
}

std::vector<unsigned char> read_bytes(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ImageIoErrc::unreadable, path, "cannot open for reading");
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
  if (in.bad()) fail(ImageIoErrc::unreadable, path, "read error");
  return bytes;
}

std::string lower_extension(const fs::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext;
}

// Netpbm header tokenizer; '#' starts a comment running to end of line.
class PnmCursor {
 public:
  PnmCursor(const std::vector<unsigned char>& bytes, const fs::path& path)
      : bytes_(bytes), path_(path) {}

  void skip_space() {
    while (pos_ < bytes_.size()) {
      if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else if (std::isspace(bytes_[pos_])) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  unsigned long number() {
    skip_space();
    if (pos_ >= bytes_.size() || !std::isdigit(bytes_[pos_])) {
      fail(ImageIoErrc::malformed, path_, "expected integer");
    }
    unsigned long v = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      v = v * 10 + (bytes_[pos_++] - '0');
      if (v > 1'000'000'000UL) fail(ImageIoErrc::malformed, path_, "integer overflow");
    }
    return v;
  }

  // Exactly one whitespace byte separates the header from P5 raster data.
  void single_space() {
    if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) {
      fail(ImageIoErrc::malformed, path_, "missing header terminator");
    }
    ++pos_;
  }

  std::size_t pos() const { return pos_; }

 private:
  const std::vector<unsigned char>& bytes_;
  const fs::path& path_;
  std::size_t pos_ = 2;
};

GrayImage read_pgm(const std::vector<unsigned char>& bytes, const fs::path& path) {
  const bool ascii = bytes[1] == '2';
  PnmCursor cur(bytes, path);
  const auto cols = cur.number();
  const auto rows = cur.number();
  const auto maxval = cur.number();
  if (rows == 0 || cols == 0) fail(ImageIoErrc::malformed, path, "zero dimension");
  if (maxval == 0) fail(ImageIoErrc::malformed, path, "zero maxval");
  if (maxval > 255) fail(ImageIoErrc::unsupported_depth, path, "maxval above 255");

  const double scale = static_cast<double>(maxval);
  const std::size_t count = rows * cols;
  std::vector<double> data(count);
  if (ascii) {
    for (std::size_t k = 0; k < count; ++k) {
      const auto v = cur.number();
      if (v > maxval) fail(ImageIoErrc::malformed, path, "sample exceeds maxval");
      data[k] = static_cast<double>(v) / scale;
    }
  } else {
    cur.single_space();
    if (bytes.size() - cur.pos() < count) {
      fail(ImageIoErrc::malformed, path, "truncated raster");
    }
    const unsigned char* raster = bytes.data() + cur.pos();
    for (std::size_t k = 0; k < count; ++k) {
      if (raster[k] > maxval) fail(ImageIoErrc::malformed, path, "sample exceeds maxval");
      data[k] = static_cast<double>(raster[k]) / scale;
    }
  }
  return GrayImage(rows, cols, std::move(data));
}

AnyImage read_png(const std::vector<unsigned char>& bytes, const fs::path& path) {
  png_image image{};
  image.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_memory(&image, bytes.data(), bytes.size())) {
    fail(ImageIoErrc::malformed, path, image.message);
  }
  if (image.format & PNG_FORMAT_FLAG_LINEAR) {
    png_image_free(&image);
    fail(ImageIoErrc::unsupported_depth, path, "16-bit PNG");
  }
  if (image.format & PNG_FORMAT_FLAG_ALPHA) {
    png_image_free(&image);
    fail(ImageIoErrc::unsupported_format, path, "PNG with alpha channel");
  }
  const bool color = (image.format & PNG_FORMAT_FLAG_COLOR) != 0;
  image.format = color ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;

  const std::size_t rows = image.height;
  const std::size_t cols = image.width;
  std::vector<png_byte> buffer(PNG_IMAGE_SIZE(image));
  if (!png_image_finish_read(&image, nullptr, buffer.data(), 0, nullptr)) {
    fail(ImageIoErrc::malformed, path, image.message);
  }

  const std::size_t count = rows * cols;
  if (!color) {
    std::vector<double> data(count);
    for (std::size_t k = 0; k < count; ++k) data[k] = buffer[k] / 255.0;
    return GrayImage(rows, cols, std::move(data));
  }
  std::array<std::vector<double>, 3> planes;
  for (auto& p : planes) p.resize(count);
  for (std::size_t k = 0; k < count; ++k) {
    for (std::size_t ch = 0; ch < 3; ++ch) planes[ch][k] = buffer[3 * k + ch] / 255.0;
  }
  return RgbImage(GrayImage(rows, cols, std::move(planes[0])),
                  GrayImage(rows, cols, std::move(planes[1])),
                  GrayImage(rows, cols, std::move(planes[2])));
}

}  // namespace

AnyImage load_image(const fs::path& path) {
  const auto bytes = read_bytes(path);
  static constexpr std::array<unsigned char, 8> kPngMagic = {0x89, 'P', 'N', 'G',
                                                              '\r', '\n', 0x1a, '\n'};
  if (bytes.size() >= kPngMagic.size() &&
      std::equal(kPngMagic.begin(), kPngMagic.end(), bytes.begin())) {
    return read_png(bytes, path);
  }
  if (bytes.size() >= 2 && bytes[0] == 'P' && (bytes[1] == '2' || bytes[1] == '5')) {
    return read_pgm(bytes, path);
  }
  fail(ImageIoErrc::unsupported_format, path, "not a PGM or PNG file");
}

GrayImage load_gray(const fs::path& path) {
  auto any = load_image(path);
  if (auto* gray = std::get_if<GrayImage>(&any)) return std::move(*gray);
  return to_gray(std::get<RgbImage>(any));
}

unsigned char quantize(double v) noexcept {
  const double scaled = std::floor(std::clamp(v, 0.0, 1.0) * 255.0 + 0.5);
  return static_cast<unsigned char>(std::min(scaled, 255.0));
}

void save_image(const GrayImage& img, const fs::path& path) {
  if (img.empty()) throw std::invalid_argument("save_image: empty image");
  std::vector<unsigned char> bytes(img.size());
  std::transform(img.data().begin(), img.data().end(), bytes.begin(), quantize);

  const std::string ext = lower_extension(path);
  if (ext == ".pgm") {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ImageIoErrc::unwritable, path, "cannot open for writing");
    out << "P5\n" << img.cols() << ' ' << img.rows() << "\n255\n";
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) fail(ImageIoErrc::unwritable, path, "write failed");
  } else if (ext == ".png") {
    png_image image{};
    image.version = PNG_IMAGE_VERSION;
    image.width = static_cast<png_uint_32>(img.cols());
    image.height = static_cast<png_uint_32>(img.rows());
    image.format = PNG_FORMAT_GRAY;
    if (!png_image_write_to_file(&image, path.c_str(), 0, bytes.data(), 0, nullptr)) {
      fail(ImageIoErrc::unwritable, path, image.message);
    }
  } else {
    fail(ImageIoErrc::unsupported_format, path, "extension must be .pgm or .png");
  }
}

GrayImage downscale_nearest(const GrayImage& img, std::size_t factor) {
  if (factor == 0) throw std::invalid_argument("downscale_nearest: factor must be positive");
  if (img.rows() % factor != 0 || img.cols() % factor != 0) {
    throw std::invalid_argument("downscale_nearest: dimensions not divisible by factor");
  }
  const std::size_t rows = img.rows() / factor;
  const std::size_t cols = img.cols() / factor;
  const std::size_t offset = factor / 2;
  std::vector<double> out(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      out[i * cols + j] = img(i * factor + offset, j * factor + offset);
    }
  }
  return GrayImage(rows, cols, std::move(out));
}

GrayImage crop_to_multiple(const GrayImage& img, std::size_t factor) {
  if (factor == 0) throw std::invalid_argument("crop_to_multiple: factor must be positive");
  if (img.rows() < factor || img.cols() < factor) {
    throw std::invalid_argument("crop_to_multiple: image smaller than factor");
  }
  const std::size_t rows = img.rows() / factor * factor;
  const std::size_t cols = img.cols() / factor * factor;
  if (rows == img.rows() && cols == img.cols()) return img;
  std::vector<double> out;
  out.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto r = img.row(i);
    out.insert(out.end(), r.begin(), r.begin() + static_cast<std::ptrdiff_t>(cols));
  }
  return GrayImage(rows, cols, std::move(out));
}

}  // namespace rescale
