#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rescale::sk {

/// Raised when the Jackson normalization integral cannot be brought within
/// the requested absolute tolerance.
class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Even one-dimensional kernel, treated as zero for |x| > support_radius().
class Kernel1D {
 public:
  Kernel1D(std::string name, double support_radius, std::function<double(double)> fn);

  double operator()(double x) const {
    return (x > radius_ || x < -radius_) ? 0.0 : fn_(x);
  }
  double support_radius() const noexcept { return radius_; }
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
  double radius_;
  std::function<double(double)> fn_;
};

/// Product kernel chi(x1, x2) = kx(x1) * ky(x2).
struct Kernel2D {
  Kernel1D kx;
  Kernel1D ky;

  explicit Kernel2D(const Kernel1D& k) : kx(k), ky(k) {}
  Kernel2D(Kernel1D x, Kernel1D y) : kx(std::move(x)), ky(std::move(y)) {}

  double operator()(double x1, double x2) const { return kx(x1) * ky(x2); }
};

/// Central B-spline of order N >= 1,
///   beta^N(x) = 1/(N-1)! sum_{i=0}^{N} (-1)^i C(N,i) (N/2 + x - i)_+^{N-1},
/// supported on [-N/2, N/2]. For N = 1 the step takes the value 1/2 at +-1/2.
double bspline(int order, double x);

/// sin(pi t) / (pi t), with sinc(0) = 1.
double sinc(double t);

/// sinc^{2N}(x / (2 N pi alpha)). Requires N >= 1, alpha >= 1.
double jackson_unnormalized(int order, double alpha, double x);

/// c_N = 1 / integral over R of sinc^{2N}(u / (2 N pi alpha)) du, by adaptive
/// Gauss-Kronrod quadrature lobe by lobe on a domain whose neglected tail is
/// below 1e-10, at absolute tolerance `abs_tol`. Throws QuadratureError when
/// the domain or error budget cannot be met (in practice N = 1, whose sinc^2
/// tail decays too slowly).
double normalization_coefficient(int order, double alpha, double abs_tol = 1e-9);

/// Smallest radius T (to 1e-9) such that the normalized Jackson kernel has
/// mass below `tail` outside [-T, T].
double jackson_support_radius(int order, double alpha, double tail = 1e-10);

Kernel1D make_bspline(int order);
Kernel1D make_jackson(int order, double alpha, double tail = 1e-10);

/// Parses "bspline:N" or "jackson:N:alpha" (alpha defaults to 1).
/// Throws std::invalid_argument on anything else.
Kernel1D parse_kernel(std::string_view spec);

}  // namespace rescale::sk
