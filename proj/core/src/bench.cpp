#include "rescale/bench.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "rescale/bicubic.hpp"
#include "rescale/fuzzy.hpp"
#include "rescale/image_io.hpp"
#include "rescale/kernels.hpp"
#include "rescale/sk.hpp"

namespace rescale::bench {

namespace fs = std::filesystem;
using metrics::MetricRecord;

const char* to_string(Method m) noexcept {
  switch (m) {
    case Method::fuzzy: return "fuzzy";
    case Method::sk: return "sk";
    case Method::bicubic: return "bicubic";
  }
  return "?";
}

Method parse_method(const std::string& name) {
  if (name == "fuzzy") return Method::fuzzy;
  if (name == "sk") return Method::sk;
  if (name == "bicubic") return Method::bicubic;
  throw std::invalid_argument("unknown method '" + name + "'");
}

bool BenchConfig::has(Method m) const {
  return std::find(methods.begin(), methods.end(), m) != methods.end();
}

void BenchConfig::validate() const {
  if (reduce_factor == 0 || reduce_factor % 2 == 0) {
    throw std::invalid_argument("reduce_factor must be odd (magnification is 2p+1)");
  }
  if (!(delta_step > 0.0)) throw std::invalid_argument("delta_step must be positive");
  if (!(delta_start >= 0.0 && delta_start <= delta_end && delta_end <= 1.0)) {
    throw std::invalid_argument("need 0 <= delta_start <= delta_end <= 1");
  }
  if (methods.empty()) throw std::invalid_argument("no methods selected");
  if (bicubic_repeats == 0) throw std::invalid_argument("bicubic_repeats must be >= 1");
  if (has(Method::sk)) {
    if (sk_w_values.empty()) throw std::invalid_argument("sk selected but no w values");
    for (double w : sk_w_values) {
      if (!(w >= 1.0)) throw std::invalid_argument("sk w values must be >= 1");
    }
  }
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double to_double(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  double d = 0.0;
  try {
    d = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != v.size()) {
    throw std::invalid_argument("config: '" + key + "' expects a number, got '" + v + "'");
  }
  return d;
}

std::uint64_t to_unsigned(const std::string& key, const std::string& v) {
  if (v.empty() || !std::all_of(v.begin(), v.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw std::invalid_argument("config: '" + key + "' expects a non-negative integer");
  }
  return std::stoull(v);
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw std::invalid_argument("config: '" + key + "' expects true or false");
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

}  // namespace

BenchConfig parse_config(std::istream& in, BenchConfig cfg) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "images") {
      cfg.image_paths = split_list(value);
    } else if (key == "reduce_factor") {
      cfg.reduce_factor = to_unsigned(key, value);
    } else if (key == "methods") {
      cfg.methods.clear();
      for (const auto& m : split_list(value)) cfg.methods.push_back(parse_method(m));
    } else if (key == "delta_start") {
      cfg.delta_start = to_double(key, value);
    } else if (key == "delta_end") {
      cfg.delta_end = to_double(key, value);
    } else if (key == "delta_step") {
      cfg.delta_step = to_double(key, value);
    } else if (key == "sk_w") {
      cfg.sk_w_values.clear();
      for (const auto& w : split_list(value)) cfg.sk_w_values.push_back(to_double(key, w));
    } else if (key == "kernel") {
      cfg.sk_kernel = value;
    } else if (key == "out") {
      cfg.output_dir = value;
    } else if (key == "seed") {
      cfg.seed = to_unsigned(key, value);
    } else if (key == "large_images_only_at_r5") {
      cfg.large_images_only_at_r5 = to_bool(key, value);
    } else if (key == "bicubic_repeats") {
      cfg.bicubic_repeats = to_unsigned(key, value);
    } else {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": unknown key '" +
                                  key + "'");
    }
  }
  return cfg;
}

BenchConfig load_config(const fs::path& path, BenchConfig base) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file " + path.string());
  return parse_config(in, std::move(base));
}

std::vector<double> delta_grid(double start, double end, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("delta_grid: step must be positive");
  std::vector<double> grid;
  // Index-based to avoid accumulating rounding; the slack admits the end
  // point when (end - start) / step is integral up to rounding.
  const auto count = static_cast<std::size_t>(std::floor((end - start) / step + 1e-9)) + 1;
  grid.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    grid.push_back(std::min(start + static_cast<double>(i) * step, end));
  }
  return grid;
}

SweepResult make_sweep(std::string image, std::vector<SweepPoint> points) {
  if (points.empty()) throw std::invalid_argument("make_sweep: empty sweep");
  for (std::size_t k = 1; k < points.size(); ++k) {
    if (!(points[k].delta > points[k - 1].delta)) {
      throw std::invalid_argument("make_sweep: delta values must increase strictly");
    }
  }
  SweepResult s{std::move(image), std::move(points), 0, 0};
  for (std::size_t k = 1; k < s.points.size(); ++k) {
    if (s.points[k].psnr_db > s.points[s.argmax_psnr].psnr_db) s.argmax_psnr = k;
    if (s.points[k].s_index > s.points[s.argmax_s].s_index) s.argmax_s = k;
  }
  return s;
}

GrayImage synthetic_image(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  // Explicit mapping keeps the stream identical across standard libraries.
  auto uniform = [&gen] { return static_cast<double>(gen() >> 11) * 0x1.0p-53; };
  constexpr std::size_t kCell = 8;
  const std::size_t gr = rows / kCell + 2;
  const std::size_t gc = cols / kCell + 2;
  std::vector<double> coarse(gr * gc);
  for (auto& v : coarse) v = uniform();
  std::vector<double> data(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const double y = static_cast<double>(i) / kCell;
    const auto y0 = static_cast<std::size_t>(y);
    const double fy = y - static_cast<double>(y0);
    for (std::size_t j = 0; j < cols; ++j) {
      const double x = static_cast<double>(j) / kCell;
      const auto x0 = static_cast<std::size_t>(x);
      const double fx = x - static_cast<double>(x0);
      const double smooth = (1 - fy) * ((1 - fx) * coarse[y0 * gc + x0] + fx * coarse[y0 * gc + x0 + 1]) +
                            fy * ((1 - fx) * coarse[(y0 + 1) * gc + x0] + fx * coarse[(y0 + 1) * gc + x0 + 1]);
      data[i * cols + j] = std::clamp(0.85 * smooth + 0.15 * uniform(), 0.0, 1.0);
    }
  }
  return GrayImage(rows, cols, std::move(data));
}

double cpu_seconds() {
  timespec ts{};
  clock_gettime(CLOCK_PROCESS_CPUTIME_ID, &ts);
  return static_cast<double>(ts.tv_sec) + 1e-9 * static_cast<double>(ts.tv_nsec);
}

std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

namespace {

struct LoadedImage {
  std::string id;
  GrayImage image;
};

LoadedImage load_entry(const std::string& entry, std::uint64_t seed) {
  constexpr std::string_view kSynthetic = "synthetic:";
  if (entry.rfind(kSynthetic, 0) == 0) {
    const std::string dims = entry.substr(kSynthetic.size());
    std::size_t rows = 0, cols = 0;
    char x = 0;
    std::istringstream ss(dims);
    if (!(ss >> rows >> x >> cols) || x != 'x' || rows == 0 || cols == 0 || !ss.eof()) {
      throw std::invalid_argument("bad synthetic image spec '" + entry + "'");
    }
    return {"synthetic_" + dims, synthetic_image(rows, cols, seed)};
  }
  return {fs::path(entry).stem().string(), load_gray(entry)};
}

std::string format_delta(double d) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", d);
  return buf;
}

template <typename Fn>
auto timed(double& seconds, Fn&& fn) {
  const double t0 = cpu_seconds();
  auto result = fn();
  seconds = std::max(0.0, cpu_seconds() - t0);
  return result;
}

void run_image(const BenchConfig& cfg, const LoadedImage& input, const sk::Kernel1D* kernel,
               BenchReport& report, std::ostream& log) {
  const std::size_t factor = cfg.reduce_factor;
  const GrayImage reference = crop_to_multiple(input.image, factor);
  const GrayImage reduced = downscale_nearest(reference, factor);
  log << input.id << ": reference " << reference.rows() << "x" << reference.cols()
      << ", reduced " << reduced.rows() << "x" << reduced.cols() << "\n";

  auto record = [&](std::string method, std::map<std::string, std::string> params,
                    const GrayImage& out, double cpu) {
    report.records.push_back({input.id, std::move(method), std::move(params),
                              metrics::psnr(reference, out), metrics::s_index(reference, out),
                              cpu});
  };

  if (cfg.has(Method::fuzzy)) {
    const auto grid = delta_grid(cfg.delta_start, cfg.delta_end, cfg.delta_step);
    std::vector<SweepPoint> points;
    points.reserve(grid.size());
    double total_cpu = 0.0;
    for (double delta : grid) {
      double cpu = 0.0;
      const auto out = timed(cpu, [&] {
        return fuzzy::magnify(reduced, {(factor - 1) / 2, delta});
      });
      total_cpu += cpu;
      points.push_back({delta, metrics::psnr(reference, out), metrics::s_index(reference, out)});
    }
    auto sweep = make_sweep(input.id, std::move(points));
    const double mean_cpu = total_cpu / static_cast<double>(grid.size());
    for (const auto& [criterion, idx] :
         {std::pair{"psnr_max", sweep.argmax_psnr}, std::pair{"s_max", sweep.argmax_s}}) {
      const auto& pt = sweep.points[idx];
      report.records.push_back({input.id, "fuzzy",
                                {{"criterion", criterion}, {"delta", format_delta(pt.delta)}},
                                pt.psnr_db, pt.s_index, mean_cpu});
    }
    report.sweeps.push_back(std::move(sweep));
  }

  if (cfg.has(Method::sk)) {
    for (double w : cfg.sk_w_values) {
      const sk::SkParams params{w, sk::Kernel2D(*kernel), static_cast<double>(factor)};
      double cpu = 0.0;
      const auto result = timed(cpu, [&] { return sk::sk_rescale_with_stats(reduced, params); });
      if (result.max_overshoot > 0.0) {
        log << input.id << ": sk w=" << format_number(w)
            << " pre-clamp overshoot " << format_number(result.max_overshoot) << "\n";
      }
      record("sk", {{"kernel", kernel->name()}, {"w", format_number(w)}}, result.image, cpu);
    }
  }

  if (cfg.has(Method::bicubic)) {
    double total_cpu = 0.0;
    GrayImage out;
    for (std::size_t rep = 0; rep < cfg.bicubic_repeats; ++rep) {
      double cpu = 0.0;
      out = timed(cpu, [&] {
        return bicubic::bicubic_resize(reduced, reference.rows(), reference.cols());
      });
      total_cpu += cpu;
    }
    record("bicubic", {{"a", format_number(bicubic::kDefaultA)}}, out,
           total_cpu / static_cast<double>(cfg.bicubic_repeats));
  }
}

}  // namespace

BenchReport run_benchmark(const BenchConfig& cfg, std::ostream& log) {
  cfg.validate();
  BenchReport report;

  std::optional<sk::Kernel1D> kernel;
  if (cfg.has(Method::sk)) kernel = sk::parse_kernel(cfg.sk_kernel);

  for (const auto& entry : cfg.image_paths) {
    std::string id = entry;
    try {
      const auto input = load_entry(entry, cfg.seed);
      id = input.id;
      if (cfg.reduce_factor == 5 && cfg.large_images_only_at_r5) {
        const auto name = lower(id);
        if (name != "city" && name != "mountain") {
          log << id << ": skipped (reduce factor 5 runs only city and mountain)\n";
          continue;
        }
      }
      run_image(cfg, input, kernel ? &*kernel : nullptr, report, log);
    } catch (const std::exception& e) {
      log << id << ": FAILED: " << e.what() << "\n";
      report.failed_images.push_back(id);
    }
  }
  return report;
}

namespace {

std::string join_params(const std::map<std::string, std::string>& params) {
  std::string out;
  for (const auto& [k, v] : params) {
    if (!out.empty()) out += ';';
    out += k + "=" + v;
  }
  return out;
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

}  // namespace

void emit_csv(const std::vector<MetricRecord>& records, const std::vector<SweepResult>& sweeps,
              const fs::path& output_dir) {
  fs::create_directories(output_dir);
  {
    auto out = open_output(output_dir / "summary.csv");
    out << "image,method,param,psnr_db,s_index,cpu_seconds\n";
    for (const auto& r : records) {
      out << r.image << ',' << r.method << ',' << join_params(r.params) << ','
          << format_number(r.psnr_db) << ',' << format_number(r.s_index) << ','
          << format_number(r.cpu_seconds) << '\n';
    }
    if (!out) throw std::runtime_error("write failed: summary.csv");
  }
  for (const auto& s : sweeps) {
    const auto path = output_dir / ("sweep_" + s.image + ".csv");
    auto out = open_output(path);
    out << "delta,psnr_db,s_index\n";
    for (const auto& p : s.points) {
      out << format_number(p.delta) << ',' << format_number(p.psnr_db) << ','
          << format_number(p.s_index) << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path.string());
  }
}

fs::path emit_plot(const SweepResult& sweep, const fs::path& output_dir) {
  if (sweep.points.empty()) throw std::invalid_argument("emit_plot: empty sweep");
  fs::create_directories(output_dir);

  constexpr double kWidth = 720, kHeight = 420;
  constexpr double kLeft = 70, kRight = 70, kTop = 40, kBottom = 50;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;

  const auto& pts = sweep.points;
  const double d0 = pts.front().delta;
  const double d1 = pts.back().delta;

  // Infinite PSNR (exact reconstruction) is drawn at the top of the axis.
  double p_lo = INFINITY, p_hi = -INFINITY, s_lo = INFINITY, s_hi = -INFINITY;
  for (const auto& p : pts) {
    if (std::isfinite(p.psnr_db)) {
      p_lo = std::min(p_lo, p.psnr_db);
      p_hi = std::max(p_hi, p.psnr_db);
    }
    s_lo = std::min(s_lo, p.s_index);
    s_hi = std::max(s_hi, p.s_index);
  }
  if (!std::isfinite(p_lo)) p_lo = p_hi = 0.0;
  auto pad = [](double& lo, double& hi) {
    const double span = hi - lo;
    const double margin = span > 0 ? 0.05 * span : (std::abs(lo) > 0 ? 0.01 * std::abs(lo) : 1.0);
    lo -= margin;
    hi += margin;
  };
  pad(p_lo, p_hi);
  pad(s_lo, s_hi);

  auto x_of = [&](double d) { return kLeft + (d1 > d0 ? (d - d0) / (d1 - d0) : 0.5) * plot_w; };
  auto y_of = [&](double v, double lo, double hi) {
    if (!std::isfinite(v)) v = hi;
    return kTop + (1.0 - (v - lo) / (hi - lo)) * plot_h;
  };
  auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return std::string(buf);
  };
  auto label = [](double v, const char* fmt) {
    char buf[32];
    std::snprintf(buf, sizeof buf, fmt, v);
    return std::string(buf);
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">"
      << sweep.image << ": PSNR and S against delta</text>\n";
  // Frame and axes.
  svg << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << plot_w << "\" height=\""
      << plot_h << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int t = 0; t <= 4; ++t) {
    const double f = t / 4.0;
    const double y = kTop + (1.0 - f) * plot_h;
    const double x = kLeft + f * plot_w;
    svg << "<text x=\"" << kLeft - 6 << "\" y=\"" << num(y + 4)
        << "\" text-anchor=\"end\" font-size=\"11\" fill=\"#1f5fbf\">"
        << label(p_lo + f * (p_hi - p_lo), "%.2f") << "</text>\n";
    svg << "<text x=\"" << kLeft + plot_w + 6 << "\" y=\"" << num(y + 4)
        << "\" font-size=\"11\" fill=\"#c0392b\">" << label(s_lo + f * (s_hi - s_lo), "%.4f")
        << "</text>\n";
    svg << "<text x=\"" << num(x) << "\" y=\"" << kTop + plot_h + 16
        << "\" text-anchor=\"middle\" font-size=\"11\">" << label(d0 + f * (d1 - d0), "%.2f")
        << "</text>\n";
  }
  svg << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 10
      << "\" text-anchor=\"middle\" font-size=\"12\">delta</text>\n";
  svg << "<text x=\"16\" y=\"" << kTop + plot_h / 2
      << "\" font-size=\"12\" fill=\"#1f5fbf\" transform=\"rotate(-90 16 " << kTop + plot_h / 2
      << ")\" text-anchor=\"middle\">PSNR (dB)</text>\n";
  svg << "<text x=\"" << kWidth - 12 << "\" y=\"" << kTop + plot_h / 2
      << "\" font-size=\"12\" fill=\"#c0392b\" transform=\"rotate(90 " << kWidth - 12 << ' '
      << kTop + plot_h / 2 << ")\" text-anchor=\"middle\">S index</text>\n";

  svg << "<polyline class=\"psnr\" fill=\"none\" stroke=\"#1f5fbf\" stroke-width=\"1.5\" points=\"";
  for (const auto& p : pts) svg << num(x_of(p.delta)) << ',' << num(y_of(p.psnr_db, p_lo, p_hi)) << ' ';
  svg << "\"/>\n";
  svg << "<polyline class=\"s-index\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"1.5\" points=\"";
  for (const auto& p : pts) svg << num(x_of(p.delta)) << ',' << num(y_of(p.s_index, s_lo, s_hi)) << ' ';
  svg << "\"/>\n";

  const auto& bp = pts[sweep.argmax_psnr];
  const auto& bs = pts[sweep.argmax_s];
  svg << "<circle class=\"max-psnr\" data-delta=\"" << format_number(bp.delta) << "\" cx=\""
      << num(x_of(bp.delta)) << "\" cy=\"" << num(y_of(bp.psnr_db, p_lo, p_hi))
      << "\" r=\"4\" fill=\"#1f5fbf\"/>\n";
  svg << "<circle class=\"max-s\" data-delta=\"" << format_number(bs.delta) << "\" cx=\""
      << num(x_of(bs.delta)) << "\" cy=\"" << num(y_of(bs.s_index, s_lo, s_hi))
      << "\" r=\"4\" fill=\"#c0392b\"/>\n";
  svg << "<text x=\"" << kLeft + 8 << "\" y=\"" << kTop + 16 << "\" font-size=\"11\">"
      << "max PSNR at delta=" << format_number(bp.delta) << ", max S at delta="
      << format_number(bs.delta) << "</text>\n";
  svg << "</svg>\n";

  const auto path = output_dir / ("sweep_" + sweep.image + ".svg");
  auto out = open_output(path);
  out << svg.str();
  if (!out) throw std::runtime_error("write failed: " + path.string());
  return path;
}

}  // namespace rescale::bench
