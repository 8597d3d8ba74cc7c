#include "rescale/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace rescale::metrics {

namespace {

void check_dims(const GrayImage& a, const GrayImage& b, const char* who) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument(std::string(who) + ": image dimensions differ");
  }
  if (a.empty()) throw std::invalid_argument(std::string(who) + ": empty images");
}

}  // namespace

double mse(const GrayImage& ref, const GrayImage& test) {
  check_dims(ref, test, "mse");
  const auto a = ref.data();
  const auto b = test.data();
  double sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double d = a[k] - b[k];
    sum += d * d;
  }
  return sum / static_cast<double>(a.size());
}

double psnr(const GrayImage& ref, const GrayImage& test) {
  const double e = mse(ref, test);
  if (e == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(1.0 / e);
}

double s_index(const GrayImage& ref, const GrayImage& test) {
  check_dims(ref, test, "s_index");
  const auto a = ref.data();
  const auto b = test.data();
  double sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) sum += 1.0 - std::abs(a[k] - b[k]);
  return sum / static_cast<double>(a.size());
}

}  // namespace rescale::metrics
