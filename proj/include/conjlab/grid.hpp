#pragma once

#include <Eigen/Core>

#include <numbers>

namespace conjlab {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi_v<double>;

/// Uniform grid x_j = 2*pi*j/n on the circle, n a power of two >= 4.
///
/// Power-of-two sizes keep the Fourier analysis fast and unambiguous;
/// anything else is rejected rather than resampled silently.
class Grid {
 public:
  explicit Grid(Eigen::Index n);

  Eigen::Index size() const { return n_; }
  double spacing() const { return kTwoPi / static_cast<double>(n_); }
  double point(Eigen::Index j) const {
    return kTwoPi * static_cast<double>(j) / static_cast<double>(n_);
  }
  Eigen::ArrayXd points() const;

  /// Largest harmonic below Nyquist the grid resolves: n/2 - 1.
  Eigen::Index max_degree() const { return n_ / 2 - 1; }

  friend bool operator==(const Grid& a, const Grid& b) { return a.n_ == b.n_; }

 private:
  Eigen::Index n_;
};

bool is_power_of_two(Eigen::Index n);

}  // namespace conjlab
