// Acceptance checks. Prints one PASS / FAIL / SKIP line per criterion and
// exits non-zero if any criterion fails. Tolerances are fixed below.
//
// Environment:
//   RESCALE_WATERLOO_DIR  directory holding boat, baboon, city and mountain
//                         (.png or .pgm). Gates the corpus trend checks; when
//                         unset those checks are skipped and the stand-in
//                         corpus trends are printed for information.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <regex>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "../unit/oracles.hpp"
#include "rescale/bench.hpp"
#include "rescale/bicubic.hpp"
#include "rescale/fuzzy.hpp"
#include "rescale/image_io.hpp"
#include "rescale/metrics.hpp"
#include "rescale/sk.hpp"

namespace fs = std::filesystem;
using rescale::GrayImage;

namespace {

constexpr double kFuzzyTol = 1e-12;
constexpr double kFuzzyBudgetS = 5.0;
constexpr double kAxiomTol = 1e-12;
constexpr double kPartitionTol = 1e-12;
constexpr double kIntegralTol = 1e-6;
constexpr double kSkOracleTol = 1e-8;
constexpr double kSkBudgetS = 60.0;
constexpr double kConstantTol = 1e-9;
constexpr double kLargeWTol = 0.02;
constexpr double kMetricTol = 1e-12;
constexpr double kStretchPsnrDb = 1.0;
constexpr double kStretchS = 0.015;

enum class Status { pass, fail, skip };

struct Outcome {
  Status status = Status::pass;
  std::string detail;
};

class Check {
 public:
  void require(bool cond, const std::string& what) {
    if (!cond && failures_.size() < 8) failures_.push_back(what);
    if (!cond) ++failed_;
  }
  Outcome outcome(const std::string& ok_detail) const {
    if (failed_ == 0) return {Status::pass, ok_detail};
    std::string d = std::to_string(failed_) + " failure(s): ";
    for (std::size_t i = 0; i < failures_.size(); ++i) d += (i ? "; " : "") + failures_[i];
    return {Status::fail, d};
  }

 private:
  std::vector<std::string> failures_;
  std::size_t failed_ = 0;
};

double elapsed(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

// Composite Simpson on [a, b] with n (even) panels.
double simpson(const std::function<double(double)>& f, double a, double b, int n) {
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

double gauss_legendre5(const std::function<double(double)>& f, double a, double b) {
  static constexpr double x[] = {0.0, 0.5384693101056831, 0.9061798459386640};
  static constexpr double w[] = {0.5688888888888889, 0.4786286704993665, 0.2369268850561891};
  const double m = 0.5 * (a + b), h = 0.5 * (b - a);
  double s = w[0] * f(m);
  for (int i = 1; i < 3; ++i) s += w[i] * (f(m - h * x[i]) + f(m + h * x[i]));
  return s * h;
}

// --- 1 ---------------------------------------------------------------------
Outcome fuzzy_oracle() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 gen(20240501);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto img = oracle::random_image(5 + gen() % 5, 5 + gen() % 5, gen);
    for (std::size_t p : {1u, 2u}) {
      for (double delta : {0.0, 0.5, 1.0}) {
        const auto fast = rescale::fuzzy::magnify(img, {p, delta});
        const auto ref = oracle::fuzzy_magnify(img, p, delta);
        worst = std::max(worst, max_abs_diff(fast.data(), ref.data()));
      }
    }
  }
  const double secs = elapsed(t0);
  Check c;
  c.require(worst < kFuzzyTol, "max error " + fmt("%.3g", worst));
  c.require(secs < kFuzzyBudgetS, "runtime " + fmt("%.2f", secs) + " s");
  return c.outcome("max error " + fmt("%.3g", worst) + ", " + fmt("%.2f", secs) + " s");
}

// --- 2 ---------------------------------------------------------------------
Outcome centre_preservation() {
  std::mt19937_64 gen(77);
  Check c;
  for (int trial = 0; trial < 20; ++trial) {
    const auto img = oracle::random_image(5 + gen() % 5, 5 + gen() % 5, gen);
    for (std::size_t p : {1u, 2u}) {
      for (double delta : {0.0, 0.5, 1.0}) {
        const auto back =
            rescale::downscale_nearest(rescale::fuzzy::magnify(img, {p, delta}), 2 * p + 1);
        c.require(back == img, "trial " + std::to_string(trial) + " p=" + std::to_string(p) +
                                   " delta=" + fmt("%g", delta));
      }
    }
  }
  return c.outcome("20 images x 6 (p, delta) bit-exact");
}

// --- 3 ---------------------------------------------------------------------
Outcome k_alpha_axioms() {
  using rescale::fuzzy::Interval;
  using rescale::fuzzy::k_alpha;
  std::mt19937_64 gen(4242);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  Check c;
  for (int t = 0; t < 10000; ++t) {
    double a = uni(gen), b = uni(gen);
    if (a > b) std::swap(a, b);
    const Interval x(a, b);
    double alpha = uni(gen), beta = uni(gen);
    if (alpha > beta) std::swap(alpha, beta);
    const Interval y(x.lo() + uni(gen) * (x.hi() - x.lo()), x.hi() + uni(gen) * (1.0 - x.hi()));
    const double k0 = k_alpha(x, 0.0), k1 = k_alpha(x, 1.0);
    c.require(std::abs(k0 - x.lo()) <= kAxiomTol && std::abs(k1 - x.hi()) <= kAxiomTol, "k.1");
    c.require(std::abs(k_alpha(x, alpha) - (k0 + alpha * (k1 - k0))) <= kAxiomTol, "k.2");
    c.require(x.precedes(y) && k_alpha(x, alpha) <= k_alpha(y, alpha) + kAxiomTol, "k.3");
    c.require(k_alpha(x, alpha) <= k_alpha(x, beta) + kAxiomTol, "k.4");
  }
  return c.outcome("10000 triples");
}

// --- 4 ---------------------------------------------------------------------
Outcome kernel_suite() {
  using namespace rescale::sk;
  Check c;
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> phase(0.0, 1.0);
  for (int order = 1; order <= 6; ++order) {
    for (int t = 0; t < 200; ++t) {
      const double u = phase(gen);
      double sum = 0.0;
      for (int k = -8; k <= 8; ++k) sum += bspline(order, u - k);
      c.require(std::abs(sum - 1.0) <= kPartitionTol,
                "partition order " + std::to_string(order) + " at " + fmt("%.6f", u));
    }
    // Gauss-Legendre on each unit polynomial piece; exact up to degree 9 and
    // never samples the knots.
    double integral = 0.0;
    const double half = order / 2.0;
    for (int piece = 0; piece < order; ++piece) {
      integral += gauss_legendre5([order](double x) { return bspline(order, x); }, -half + piece,
                                  -half + piece + 1);
    }
    c.require(std::abs(integral - 1.0) <= kIntegralTol,
              "bspline integral order " + std::to_string(order) + " = " + fmt("%.12g", integral));
  }
  c.require(bspline(2, 0.0) == 1.0, "beta2(0) = " + fmt("%.17g", bspline(2, 0.0)));
  c.require(std::abs(bspline(3, 0.0) - 0.75) <= 1e-15, "beta3(0) = " + fmt("%.17g", bspline(3, 0.0)));

  double worst_jackson = 0.0;
  for (auto [order, alpha] : {std::pair{12, 1.0}, std::pair{6, 1.0}, std::pair{4, 2.0}}) {
    const double cn = normalization_coefficient(order, alpha);
    const double scale = 2.0 * order * std::numbers::pi * alpha;
    const double radius = 2.0 * scale * 6.0;
    const int panels_per_lobe = 400;
    double integral = 0.0;
    for (double a = -radius; a < radius - 1e-9; a += scale) {
      integral += simpson([&](double x) { return cn * jackson_unnormalized(order, alpha, x); }, a,
                          a + scale, panels_per_lobe);
    }
    worst_jackson = std::max(worst_jackson, std::abs(integral - 1.0));
    c.require(std::abs(integral - 1.0) <= kIntegralTol,
              "jackson " + std::to_string(order) + " integral " + fmt("%.12g", integral));
  }
  return c.outcome("partition of unity, unit integrals (jackson err " +
                   fmt("%.2g", worst_jackson) + "), beta2(0)=1, beta3(0)=0.75");
}

// --- 5 ---------------------------------------------------------------------
Outcome sk_oracle() {
  using namespace rescale::sk;
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 gen(8080);
  const auto img = oracle::random_image(8, 8, gen);
  const double w = 5.0;
  Check c;
  std::string detail;
  struct Case {
    Kernel1D kernel;
    double window;
  };
  const std::vector<Case> cases = {
      {make_bspline(3), 1.5 + 3.0},
      // Two full sinc lobes of the Jackson kernel; |J| < 1e-20 beyond them.
      {make_jackson(12, 1.0), 2.0 * 2.0 * 12 * std::numbers::pi},
  };
  for (const auto& cs : cases) {
    const auto k = cs.kernel;
    const auto fast = sk_rescale(img, {w, Kernel2D(k), 3.0});
    const auto ref = oracle::sk_image(img, w, 3.0,
                                      [&k](double u1, double u2) { return k(u1) * k(u2); },
                                      cs.window);
    const double err = max_abs_diff(fast.data(), ref);
    c.require(fast.rows() == 24 && fast.cols() == 24, k.name() + " output size");
    c.require(err < kSkOracleTol, k.name() + " max error " + fmt("%.3g", err));
    detail += k.name() + " err " + fmt("%.2g", err) + ", ";
  }
  const double secs = elapsed(t0);
  c.require(secs < kSkBudgetS, "runtime " + fmt("%.1f", secs) + " s");
  return c.outcome(detail + "w=5, " + fmt("%.1f", secs) + " s");
}

// --- 6 ---------------------------------------------------------------------
Outcome sk_consistency() {
  using namespace rescale::sk;
  Check c;
  for (double level : {0.0, 0.3, 0.77, 1.0}) {
    const GrayImage flat(7, 5, std::vector<double>(35, level));
    for (int order : {2, 3, 4}) {
      for (double w : {1.0, 3.7, 15.0}) {
        const auto out = sk_rescale(flat, {w, Kernel2D(make_bspline(order)), 3.0});
        double err = 0.0;
        for (double v : out.data()) err = std::max(err, std::abs(v - level));
        c.require(err <= kConstantTol, "constant " + fmt("%g", level) + " order " +
                                           std::to_string(order) + " w=" + fmt("%g", w));
      }
    }
  }
  std::vector<double> data(256);
  for (int i = 0; i < 16; ++i) {
    for (int j = 0; j < 16; ++j) {
      data[i * 16 + j] = 0.5 + 0.35 * std::sin(0.4 * i) * std::cos(0.3 * j + 0.5);
    }
  }
  const GrayImage img(16, 16, std::move(data));
  double worst = 0.0;
  for (const auto& k : {make_bspline(3), make_jackson(12, 1.0)}) {
    // R = 1 evaluates at pixel centres, half a pixel from every boundary.
    const auto out = sk_rescale(img, {64.0, Kernel2D(k), 1.0});
    const double err = max_abs_diff(out.data(), img.data());
    worst = std::max(worst, err);
    c.require(err < kLargeWTol, k.name() + " w=64 error " + fmt("%.4f", err));
  }
  return c.outcome("constants to 1e-9, w=64 max error " + fmt("%.4f", worst));
}

// --- 7 ---------------------------------------------------------------------
Outcome metric_spots() {
  using namespace rescale::metrics;
  Check c;
  const GrayImage zeros(4, 4);
  const GrayImage tenth(4, 4, std::vector<double>(16, 0.1));  // MSE 0.01
  c.require(std::abs(psnr(zeros, tenth) - 20.0) <= 1e-9, "PSNR(MSE=0.01) = " + fmt("%.12g", psnr(zeros, tenth)));
  c.require(std::abs(mse(zeros, tenth) - 0.01) <= kMetricTol, "MSE");
  const GrayImage quarter(4, 4, std::vector<double>(16, 0.25));
  c.require(std::abs(s_index(zeros, quarter) - 0.75) <= kMetricTol, "S(0.25 difference)");
  std::mt19937_64 gen(3);
  const auto img = oracle::random_image(6, 9, gen);
  c.require(is_infinite_psnr(psnr(img, img)), "identical images flagged");
  c.require(s_index(img, img) == 1.0, "identical images S = 1");
  return c.outcome("PSNR 20 dB, S 0.75, identical flagged");
}

// --- shared corpus runs ------------------------------------------------------
struct ImageRun {
  std::string name;
  rescale::bench::SweepResult sweep;
  std::map<double, double> sk_psnr;  // w -> PSNR
  std::map<double, double> sk_s;
  std::map<double, double> sk_cpu;
  double bicubic_psnr = 0.0, bicubic_s = 0.0, bicubic_cpu = 0.0, fuzzy_cpu = 0.0;
  double fuzzy_psnr_max = 0.0, fuzzy_s_max = 0.0;
};

std::vector<ImageRun> run_corpus(const std::vector<std::string>& paths, const fs::path& out) {
  rescale::bench::BenchConfig cfg;
  cfg.image_paths = paths;
  cfg.output_dir = out;
  std::ostringstream log;
  const auto report = rescale::bench::run_benchmark(cfg, log);
  if (!report.ok()) throw std::runtime_error("benchmark failed:\n" + log.str());
  std::vector<ImageRun> runs;
  for (const auto& sweep : report.sweeps) {
    ImageRun r;
    r.name = sweep.image;
    r.sweep = sweep;
    for (const auto& rec : report.records) {
      if (rec.image != sweep.image) continue;
      if (rec.method == "sk") {
        const double w = std::stod(rec.params.at("w"));
        r.sk_psnr[w] = rec.psnr_db;
        r.sk_s[w] = rec.s_index;
        r.sk_cpu[w] = rec.cpu_seconds;
      } else if (rec.method == "bicubic") {
        r.bicubic_psnr = rec.psnr_db;
        r.bicubic_s = rec.s_index;
        r.bicubic_cpu = rec.cpu_seconds;
      } else if (rec.method == "fuzzy") {
        r.fuzzy_cpu = rec.cpu_seconds;
        if (rec.params.at("criterion") == "psnr_max") r.fuzzy_psnr_max = rec.psnr_db;
        if (rec.params.at("criterion") == "s_max") r.fuzzy_s_max = rec.s_index;
      }
    }
    runs.push_back(std::move(r));
  }
  return runs;
}

bool interior_max(const rescale::bench::SweepResult& s) {
  return s.argmax_psnr > 0 && s.argmax_psnr + 1 < s.points.size();
}

void print_trends(const std::vector<ImageRun>& runs, const char* label) {
  std::printf("        %s trends (R=3):\n", label);
  std::printf("        %-10s %6s %9s %9s %9s %9s %9s  %10s %10s %10s\n", "image", "d_max", "fuzzy",
              "bicubic", "sk15", "sk20", "sk25", "cpu_bic", "cpu_fuz", "cpu_sk15");
  for (const auto& r : runs) {
    std::printf("        %-10s %6.2f %9.4f %9.4f %9.4f %9.4f %9.4f  %10.6f %10.6f %10.6f\n",
                r.name.c_str(), r.sweep.delta_max_psnr(), r.fuzzy_psnr_max, r.bicubic_psnr,
                r.sk_psnr.at(15), r.sk_psnr.at(20), r.sk_psnr.at(25), r.bicubic_cpu, r.fuzzy_cpu,
                r.sk_cpu.at(15));
  }
}

struct Reference {
  double psnr_fuzzy, psnr_bicubic, psnr_sk15, psnr_sk20, psnr_sk25;
  double s_fuzzy, s_bicubic, s_sk15, s_sk20, s_sk25;
};

const std::map<std::string, Reference>& published_tables() {
  static const std::map<std::string, Reference> t = {
      {"baboon", {22.0121, 22.2143, 22.0921, 22.3625, 22.4313, 0.9456, 0.9449, 0.9431, 0.9458, 0.9470}},
      {"boat", {29.6480, 28.0849, 26.9948, 28.2301, 28.9076, 0.9742, 0.9771, 0.9742, 0.9779, 0.9796}},
      {"city", {24.9440, 24.4878, 24.0382, 24.6735, 24.9626, 0.9735, 0.9711, 0.9686, 0.9715, 0.9731}},
      {"mountain", {22.4655, 21.4886, 22.3564, 23.0615, 23.3315, 0.9523, 0.9455, 0.9478, 0.9525, 0.9548}},
  };
  return t;
}

std::optional<fs::path> find_image(const fs::path& dir, const std::string& stem) {
  for (const char* ext : {".png", ".pgm", ".PNG", ".PGM"}) {
    const auto p = dir / (stem + ext);
    if (fs::exists(p)) return p;
  }
  return std::nullopt;
}

// --- 8 ---------------------------------------------------------------------
Outcome corpus_trends(const std::vector<ImageRun>* corpus) {
  if (corpus == nullptr) return {Status::skip, "RESCALE_WATERLOO_DIR not set"};
  Check c;
  std::string stretch;
  for (const auto& r : *corpus) {
    c.require(r.sk_psnr.at(15) < r.sk_psnr.at(20) && r.sk_psnr.at(20) < r.sk_psnr.at(25),
              "(a) " + r.name + " PSNR not increasing in w");
    if (r.name == "baboon") continue;
    c.require(interior_max(r.sweep), "(b) " + r.name + " delta_max on grid edge");
    c.require(r.fuzzy_psnr_max > r.bicubic_psnr, "(c) " + r.name + " fuzzy <= bicubic");
  }
  std::printf("        stretch goal (not gating): |dPSNR| <= %.1f dB, |dS| <= %.3f\n", kStretchPsnrDb,
              kStretchS);
  for (const auto& r : *corpus) {
    const auto it = published_tables().find(r.name);
    if (it == published_tables().end()) continue;
    const auto& ref = it->second;
    const double dp[] = {r.fuzzy_psnr_max - ref.psnr_fuzzy, r.bicubic_psnr - ref.psnr_bicubic,
                         r.sk_psnr.at(15) - ref.psnr_sk15, r.sk_psnr.at(20) - ref.psnr_sk20,
                         r.sk_psnr.at(25) - ref.psnr_sk25};
    const double ds[] = {r.fuzzy_s_max - ref.s_fuzzy, r.bicubic_s - ref.s_bicubic,
                         r.sk_s.at(15) - ref.s_sk15, r.sk_s.at(20) - ref.s_sk20,
                         r.sk_s.at(25) - ref.s_sk25};
    bool within = true;
    for (double d : dp) within = within && std::abs(d) <= kStretchPsnrDb;
    for (double d : ds) within = within && std::abs(d) <= kStretchS;
    std::printf("        %-10s dPSNR fuzzy %+.3f bic %+.3f sk %+.3f %+.3f %+.3f | dS fuzzy %+.4f "
                "bic %+.4f sk %+.4f %+.4f %+.4f %s\n",
                r.name.c_str(), dp[0], dp[1], dp[2], dp[3], dp[4], ds[0], ds[1], ds[2], ds[3],
                ds[4], within ? "within" : "outside");
  }
  return c.outcome("(a) w-monotone, (b) interior delta_max, (c) fuzzy > bicubic");
}

// --- 9 ---------------------------------------------------------------------
Outcome cpu_ordering(const std::vector<ImageRun>& runs, const std::string& corpus_name) {
  Check c;
  for (const auto& r : runs) {
    c.require(r.bicubic_cpu < r.fuzzy_cpu,
              r.name + ": bicubic " + fmt("%.6f", r.bicubic_cpu) + " s >= fuzzy " + fmt("%.6f", r.fuzzy_cpu) + " s");
    c.require(r.fuzzy_cpu < r.sk_cpu.at(15),
              r.name + ": fuzzy " + fmt("%.6f", r.fuzzy_cpu) + " s >= sk15 " + fmt("%.6f", r.sk_cpu.at(15)) + " s");
  }
  return c.outcome("bicubic < fuzzy-mean < sk(w=15) on " + corpus_name);
}

// --- 10 --------------------------------------------------------------------
Outcome determinism() {
  const auto root = fs::temp_directory_path() / ("rescale_acceptance_" + std::to_string(::getpid()));
  std::vector<std::string> summaries, sweeps;
  for (int run = 0; run < 2; ++run) {
    rescale::bench::BenchConfig cfg;
    cfg.image_paths = {"synthetic:60x45", std::string(RESCALE_TEST_DATA_DIR) + "/standin/coffee.png"};
    cfg.sk_w_values = {15.0};
    cfg.delta_step = 0.05;
    cfg.output_dir = root / std::to_string(run);
    std::ostringstream log;
    const auto report = rescale::bench::run_benchmark(cfg, log);
    if (!report.ok()) return {Status::fail, "benchmark failed: " + log.str()};
    rescale::bench::emit_csv(report.records, report.sweeps, cfg.output_dir);
    auto slurp = [](const fs::path& p) {
      std::ifstream in(p, std::ios::binary);
      return std::string{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    };
    // Drop the trailing cpu_seconds column.
    summaries.push_back(std::regex_replace(slurp(cfg.output_dir / "summary.csv"),
                                           std::regex(",[^,\n]*\n"), "\n"));
    std::string all;
    for (const auto& s : report.sweeps) all += slurp(cfg.output_dir / ("sweep_" + s.image + ".csv"));
    sweeps.push_back(all);
  }
  fs::remove_all(root);
  Check c;
  c.require(summaries[0] == summaries[1], "summary.csv differs");
  c.require(sweeps[0] == sweeps[1], "sweep CSVs differ");
  c.require(!sweeps[0].empty(), "no sweep output");
  return c.outcome("two runs byte-identical modulo cpu_seconds");
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int id, const char* title, const std::function<Outcome()>& fn) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {Status::fail, std::string("exception: ") + e.what()};
    }
    const char* tag = o.status == Status::pass ? "PASS" : o.status == Status::fail ? "FAIL" : "SKIP";
    if (o.status == Status::fail) ++failures;
    std::printf("[%s] %2d %s: %s\n", tag, id, title, o.detail.c_str());
    std::fflush(stdout);
  };

  report(1, "fuzzy oracle equivalence", fuzzy_oracle);
  report(2, "centre-preservation round trip", centre_preservation);
  report(3, "K_alpha axioms", k_alpha_axioms);
  report(4, "kernel suite", kernel_suite);
  report(5, "SK oracle equivalence", sk_oracle);
  report(6, "SK consistency", sk_consistency);
  report(7, "metric spot values", metric_spots);

  const auto scratch = fs::temp_directory_path() / ("rescale_corpus_" + std::to_string(::getpid()));
  std::optional<std::vector<ImageRun>> waterloo;
  std::vector<ImageRun> standin;
  std::string standin_error;
  if (const char* dir = std::getenv("RESCALE_WATERLOO_DIR"); dir != nullptr && *dir != '\0') {
    report(8, "Waterloo corpus trends", [&]() -> Outcome {
      std::vector<std::string> paths;
      for (const char* stem : {"baboon", "boat", "city", "mountain"}) {
        const auto p = find_image(dir, stem);
        if (!p) return {Status::fail, std::string(stem) + " not found in " + dir};
        paths.push_back(p->string());
      }
      waterloo = run_corpus(paths, scratch / "waterloo");
      print_trends(*waterloo, "Waterloo");
      return corpus_trends(&*waterloo);
    });
  } else {
    report(8, "Waterloo corpus trends", [] { return corpus_trends(nullptr); });
  }

  report(9, "CPU ordering", [&]() -> Outcome {
    if (waterloo) return cpu_ordering(*waterloo, "Waterloo corpus");
    std::vector<std::string> paths;
    for (const auto& e : fs::directory_iterator(fs::path(RESCALE_TEST_DATA_DIR) / "standin")) {
      if (e.path().extension() == ".png") paths.push_back(e.path().string());
    }
    std::sort(paths.begin(), paths.end());
    standin = run_corpus(paths, scratch / "standin");
    print_trends(standin, "stand-in corpus (information)");
    return cpu_ordering(standin, "stand-in corpus");
  });
  fs::remove_all(scratch);

  report(10, "determinism", determinism);

  std::printf("%s: %d criterion(s) failed\n", failures ? "FAILED" : "OK", failures);
  return failures ? 1 : 0;
}
