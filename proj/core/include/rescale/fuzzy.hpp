#pragma once

// Interval-valued fuzzy magnification. Each pixel q is given an interval
// membership whose width is the local oscillation scaled by delta; the
// Atanassov operator then collapses that interval back to a scalar once per
// position of the pixel's neighbourhood block, and the resulting block
// replaces the pixel in the magnified image.

#include <cstddef>
#include <vector>

#include "rescale/image.hpp"

namespace rescale::fuzzy {

/// Closed subinterval [lo, hi] of [0,1].
class Interval {
 public:
  /// Throws std::invalid_argument unless 0 <= lo <= hi <= 1.
  Interval(double lo, double hi);

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  double width() const noexcept { return hi_ - lo_; }

  /// Lattice order: componentwise comparison of the endpoints.
  bool precedes(const Interval& other) const noexcept {
    return lo_ <= other.lo_ && hi_ <= other.hi_;
  }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  double lo_;
  double hi_;
};

/// Atanassov operator K_alpha(x) = lo + alpha * (hi - lo).
/// Throws std::invalid_argument when alpha is outside [0,1].
double k_alpha(const Interval& x, double alpha);

/// (2p+1)x(2p+1) neighbourhood of a pixel. Positions falling outside the
/// source image are zero and flagged invalid.
struct Block {
  std::size_t half_width = 0;
  std::vector<double> values;
  std::vector<bool> valid;

  std::size_t side() const noexcept { return 2 * half_width + 1; }
  double value(std::size_t k, std::size_t l) const { return values[k * side() + l]; }
  bool is_valid(std::size_t k, std::size_t l) const { return valid[k * side() + l]; }
};

struct FuzzyParams {
  std::size_t p = 1;   // block half-width; magnification factor is 2p+1
  double delta = 0.5;  // in [0,1]

  /// Throws std::invalid_argument on delta outside [0,1].
  void validate() const;
  std::size_t factor() const noexcept { return 2 * p + 1; }
};

/// Block centred on (i, j), 0-based. Throws std::out_of_range when (i, j)
/// is outside the image.
Block extract_block(const GrayImage& img, std::size_t i, std::size_t j, std::size_t p);

/// max - min over the valid entries only; zero padding is ignored.
double oscillation(const Block& block);

/// [q(1 - delta*omega), q(1 - delta*omega) + delta*omega].
Interval membership_interval(double q, double omega, double delta);

/// Magnifies by 2p+1. Pixel (i,j) becomes the block
/// v' = K_v(F(q, omega, delta)) = q + (v - q) * delta * omega over every block
/// entry v, zero-padded entries included. The block centre keeps q exactly.
GrayImage magnify(const GrayImage& img, const FuzzyParams& params);

}  // namespace rescale::fuzzy
