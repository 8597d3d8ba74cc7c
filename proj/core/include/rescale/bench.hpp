#pragma once

// Benchmark harness: reduce each reference image by nearest-neighbour
// decimation, bring it back to full size with each rescaling method, and
// score the reconstruction against the reference.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "rescale/image.hpp"
#include "rescale/metrics.hpp"

namespace rescale::bench {

enum class Method { fuzzy, sk, bicubic };

const char* to_string(Method m) noexcept;
/// Throws std::invalid_argument for anything but fuzzy, sk or bicubic.
Method parse_method(const std::string& name);

struct BenchConfig {
  // Paths to PGM/PNG files, or "synthetic:<rows>x<cols>" for a seeded
  // random test image.
  std::vector<std::string> image_paths;
  std::size_t reduce_factor = 3;
  double delta_start = 0.0;
  double delta_end = 1.0;
  double delta_step = 0.01;
  std::vector<double> sk_w_values{15.0, 20.0, 25.0};
  std::string sk_kernel = "jackson:12:1";
  std::vector<Method> methods{Method::fuzzy, Method::sk, Method::bicubic};
  std::filesystem::path output_dir = "bench_out";
  std::uint64_t seed = 1;
  // At reduce_factor 5 only "city" and "mountain" are run unless cleared.
  bool large_images_only_at_r5 = true;
  // Bicubic CPU time is the mean over this many calls, matching the
  // per-delta averaging of the fuzzy timing.
  std::size_t bicubic_repeats = 101;

  /// Throws std::invalid_argument describing the first violated constraint.
  void validate() const;
  bool has(Method m) const;
};

/// Applies "key = value" lines ('#' comments) on top of `base`. Keys:
/// images, reduce_factor, methods, delta_start, delta_end, delta_step, sk_w,
/// kernel, out, seed, large_images_only_at_r5, bicubic_repeats. List values are comma separated.
BenchConfig parse_config(std::istream& in, BenchConfig base = {});
BenchConfig load_config(const std::filesystem::path& path, BenchConfig base = {});

/// start + i * step for every i with the value not exceeding end.
std::vector<double> delta_grid(double start, double end, double step);

struct SweepPoint {
  double delta;
  double psnr_db;
  double s_index;
};

struct SweepResult {
  std::string image;
  std::vector<SweepPoint> points;  // strictly increasing delta
  std::size_t argmax_psnr = 0;     // ties resolve to the smallest delta
  std::size_t argmax_s = 0;

  double delta_max_psnr() const { return points.at(argmax_psnr).delta; }
  double delta_max_s() const { return points.at(argmax_s).delta; }
};

/// Builds a SweepResult, computing both argmax indices. Throws
/// std::invalid_argument on an empty or non-increasing sweep.
SweepResult make_sweep(std::string image, std::vector<SweepPoint> points);

struct BenchReport {
  std::vector<metrics::MetricRecord> records;
  std::vector<SweepResult> sweeps;
  std::vector<std::string> failed_images;

  bool ok() const noexcept { return failed_images.empty(); }
};

/// Seeded smooth random image used for "synthetic:" entries.
GrayImage synthetic_image(std::size_t rows, std::size_t cols, std::uint64_t seed);

/// Runs the full pipeline. Per-image failures are logged to `log` and listed
/// in the report; the batch continues.
BenchReport run_benchmark(const BenchConfig& config, std::ostream& log);

/// "%.9g", with "inf" for infinite PSNR.
std::string format_number(double v);

/// Writes summary.csv (image,method,param,psnr_db,s_index,cpu_seconds) and
/// one sweep_<image>.csv (delta,psnr_db,s_index) per sweep.
void emit_csv(const std::vector<metrics::MetricRecord>& records,
              const std::vector<SweepResult>& sweeps, const std::filesystem::path& output_dir);

/// PSNR (left axis) and S (right axis) against delta, with the two maxima
/// marked. Returns the path of the written sweep_<image>.svg.
std::filesystem::path emit_plot(const SweepResult& sweep, const std::filesystem::path& output_dir);

/// Process CPU time in seconds.
double cpu_seconds();

}  // namespace rescale::bench
