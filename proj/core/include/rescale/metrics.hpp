#pragma once

#include <limits>
#include <map>
#include <string>

#include "rescale/image.hpp"

namespace rescale::metrics {

/// Mean squared error. Throws std::invalid_argument on a size mismatch.
double mse(const GrayImage& ref, const GrayImage& test);

/// 10 log10(1 / MSE) in dB (peak value 1). Identical images give +infinity,
/// see is_infinite_psnr().
double psnr(const GrayImage& ref, const GrayImage& test);

/// Likelihood index: mean of 1 - |ref - test|, in [0,1].
double s_index(const GrayImage& ref, const GrayImage& test);

inline bool is_infinite_psnr(double db) noexcept {
  return db == std::numeric_limits<double>::infinity();
}

/// One benchmark row.
struct MetricRecord {
  std::string image;
  std::string method;                        // fuzzy | sk | bicubic
  std::map<std::string, std::string> params;
  double psnr_db = 0.0;                      // +infinity for identical images
  double s_index = 0.0;
  double cpu_seconds = 0.0;
};

}  // namespace rescale::metrics
