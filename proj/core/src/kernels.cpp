#include "rescale/kernels.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <charconv>
#include <cstdio>
#include <cmath>
#include <numbers>
#include <vector>

namespace rescale::sk {

namespace {

constexpr double kPi = std::numbers::pi;

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

void check_jackson_args(int order, double alpha) {
  if (order < 1) throw std::invalid_argument("jackson: order must be >= 1");
  if (!(alpha >= 1.0)) throw std::invalid_argument("jackson: alpha must be >= 1");
}

// sinc^{2N} on the unit-lobe scale t = u / (2 N pi alpha).
double sinc_power(int order, double t) { return std::pow(sinc(t), 2 * order); }

// Number of unit lobes L such that the integral of sinc^{2N} over t > L is
// below `tail` (relative to the full integral, which exceeds 1/(2N)).
// Uses |sinc(t)| <= 1/(pi t): the tail is at most (pi L)^{-2N} L / (2N - 1).
int lobes_for_tail(int order, double tail) {
  const double budget = tail / (2.0 * order);
  for (int lobes = 2; lobes <= 4096; ++lobes) {
    const double bound = std::pow(kPi * lobes, -2.0 * order) * lobes / (2.0 * order - 1.0);
    if (bound < budget) return lobes;
  }
  return -1;
}

struct LobeIntegral {
  double value = 0.0;
  double error = 0.0;
};

// Integral of sinc^{2N}(t) over [from, to], split at the integer zeros.
LobeIntegral integrate_lobes(int order, double from, double to) {
  using Quad = boost::math::quadrature::gauss_kronrod<double, 31>;
  LobeIntegral total;
  auto f = [order](double t) { return sinc_power(order, t); };
  double a = from;
  while (a < to) {
    const double b = std::min(std::floor(a) + 1.0, to);
    double err = 0.0;
    total.value += Quad::integrate(f, a, b, 6, 1e-12, &err);
    total.error += err;
    a = b;
  }
  return total;
}

struct JacksonNorm {
  double scale;     // 2 N pi alpha
  int lobes;        // truncation of the t-domain
  double half_int;  // integral of sinc^{2N} over [0, lobes]
};

JacksonNorm jackson_norm(int order, double alpha, double abs_tol) {
  check_jackson_args(order, alpha);
  const double scale = 2.0 * order * kPi * alpha;
  const int lobes = lobes_for_tail(order, 1e-10);
  if (lobes < 0) {
    throw QuadratureError("jackson: sinc^" + std::to_string(2 * order) +
                          " tail too heavy for a finite quadrature domain");
  }
  const auto half = integrate_lobes(order, 0.0, lobes);
  // Full-line integral in u is 2 * scale * half.
  if (2.0 * scale * half.error > abs_tol) {
    throw QuadratureError("jackson: quadrature error estimate above tolerance");
  }
  return {scale, lobes, half.value};
}

}  // namespace

Kernel1D::Kernel1D(std::string name, double support_radius, std::function<double(double)> fn)
    : name_(std::move(name)), radius_(support_radius), fn_(std::move(fn)) {
  if (!(support_radius > 0.0)) {
    throw std::invalid_argument("Kernel1D: support radius must be positive");
  }
}

double bspline(int order, double x) {
  if (order < 1) throw std::invalid_argument("bspline: order must be >= 1");
  const double half = 0.5 * order;
  if (x > half || x < -half) return 0.0;
  double sum = 0.0;
  for (int i = 0; i <= order; ++i) {
    const double t = half + x - i;
    double term;
    if (t > 0.0) {
      term = order == 1 ? 1.0 : std::pow(t, order - 1);
    } else if (t == 0.0 && order == 1) {
      term = 0.5;
    } else {
      continue;
    }
    sum += ((i % 2 == 0) ? 1.0 : -1.0) * binomial(order, i) * term;
  }
  return sum / factorial(order - 1);
}

double sinc(double t) {
  if (t == 0.0) return 1.0;
  const double pt = kPi * t;
  return std::sin(pt) / pt;
}

double jackson_unnormalized(int order, double alpha, double x) {
  check_jackson_args(order, alpha);
  return sinc_power(order, x / (2.0 * order * kPi * alpha));
}

double normalization_coefficient(int order, double alpha, double abs_tol) {
  const auto norm = jackson_norm(order, alpha, abs_tol);
  return 1.0 / (2.0 * norm.scale * norm.half_int);
}

double jackson_support_radius(int order, double alpha, double tail) {
  if (!(tail > 0.0 && tail < 1.0)) {
    throw std::invalid_argument("jackson_support_radius: tail must be in (0,1)");
  }
  const auto norm = jackson_norm(order, alpha, 1e-9);
  // Mass outside [-T, T] relative to the whole kernel.
  auto outside = [&](double t) {
    return integrate_lobes(order, t, norm.lobes).value / norm.half_int;
  };
  double lo = 0.0;
  double hi = norm.lobes;
  while ((hi - lo) * norm.scale > 1e-9) {
    const double mid = 0.5 * (lo + hi);
    (outside(mid) < tail ? hi : lo) = mid;
  }
  return hi * norm.scale;
}

Kernel1D make_bspline(int order) {
  if (order < 1) throw std::invalid_argument("bspline: order must be >= 1");
  return Kernel1D("bspline:" + std::to_string(order), 0.5 * order,
                  [order](double x) { return bspline(order, x); });
}

Kernel1D make_jackson(int order, double alpha, double tail) {
  const double c = normalization_coefficient(order, alpha);
  const double radius = jackson_support_radius(order, alpha, tail);
  const double scale = 2.0 * order * kPi * alpha;
  char alpha_text[32];
  std::snprintf(alpha_text, sizeof alpha_text, "%g", alpha);
  return Kernel1D("jackson:" + std::to_string(order) + ":" + alpha_text, radius,
                  [c, order, scale](double x) { return c * sinc_power(order, x / scale); });
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

int parse_int(std::string_view s, std::string_view spec) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad kernel order in '" + std::string(spec) + "'");
  }
  return v;
}

double parse_double(std::string_view s, std::string_view spec) {
  const std::string text(s);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw std::invalid_argument("bad kernel parameter in '" + std::string(spec) + "'");
  }
  return v;
}

}  // namespace

Kernel1D parse_kernel(std::string_view spec) {
  const auto parts = split(spec, ':');
  if (parts[0] == "bspline" && parts.size() == 2) {
    return make_bspline(parse_int(parts[1], spec));
  }
  if (parts[0] == "jackson" && (parts.size() == 2 || parts.size() == 3)) {
    const double alpha = parts.size() == 3 ? parse_double(parts[2], spec) : 1.0;
    return make_jackson(parse_int(parts[1], spec), alpha);
  }
  throw std::invalid_argument("unknown kernel '" + std::string(spec) +
                              "' (expected bspline:N or jackson:N[:alpha])");
}

}  // namespace rescale::sk
