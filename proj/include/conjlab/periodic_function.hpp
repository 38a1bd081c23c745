#pragma once

#include <Eigen/Core>

#include "conjlab/grid.hpp"

namespace conjlab {

/// Real trigonometric-series coefficients in the conventional normalization
///
///   f(x) = a0/2 + sum_{k=1}^{m} (a_k cos kx + b_k sin kx),
///
/// a_k = cos_coeffs[k-1], b_k = sin_coeffs[k-1]. Dimensionless, grid-free.
struct FourierCoefficients {
  double a0 = 0.0;
  Eigen::ArrayXd cos_coeffs;
  Eigen::ArrayXd sin_coeffs;

  Eigen::Index size() const { return cos_coeffs.size(); }
  /// Largest k with (a_k, b_k) != (0, 0); 0 for a constant.
  Eigen::Index degree() const;
  double mean() const { return a0 / 2.0; }

  /// Throws input_error on length mismatch or non-finite entries.
  void validate() const;
};

/// Dual representation of a real continuous 2*pi-periodic function: uniform
/// samples on a Grid together with the coefficients of its trigonometric
/// interpolant (degree n/2 - 1, plus a halved Nyquist cosine term so that
/// synthesis reproduces the samples exactly for every input).
///
/// Immutable after construction; all operations on it are pure.
class PeriodicFunction {
 public:
  PeriodicFunction(const Grid& grid, Eigen::ArrayXd samples,
                   FourierCoefficients coeffs, double nyquist_cos);

  const Grid& grid() const { return grid_; }
  const Eigen::ArrayXd& samples() const { return samples_; }
  const FourierCoefficients& coeffs() const { return coeffs_; }
  /// Conventional Nyquist cosine amplitude A_{n/2}; the interpolant carries
  /// (A_{n/2}/2) cos(n/2 x). Zero for band-limited data.
  double nyquist_cos() const { return nyquist_cos_; }
  Eigen::Index degree() const { return degree_; }

  PeriodicFunction operator+(const PeriodicFunction& rhs) const;
  PeriodicFunction operator-(const PeriodicFunction& rhs) const;
  PeriodicFunction operator*(double scale) const;

 private:
  Grid grid_;
  Eigen::ArrayXd samples_;
  FourierCoefficients coeffs_;
  double nyquist_cos_;
  Eigen::Index degree_;
};

/// Discrete Fourier analysis of samples on the grid. The round trip
/// (analyze, then synthesize at the grid points) is exact to roundoff.
PeriodicFunction analyze(const Grid& grid, const Eigen::ArrayXd& samples);

/// Builds the band-limited function with the given coefficients on the grid;
/// samples are synthesized. Requires degree <= n/2 - 1.
PeriodicFunction from_coefficients(const Grid& grid,
                                   const FourierCoefficients& coeffs);

/// Value of the trigonometric interpolant at any angle (reduced mod 2*pi).
/// Exact for trig polynomials of degree < n/2.
double evaluate(const PeriodicFunction& f, double x);

/// Max of |f| over the oversample*n refined uniform grid (oversample >= 1).
/// A grid max, not a true supremum; accurate for band-limited functions.
double sup_norm(const PeriodicFunction& f, int oversample = 8);

/// omega(delta) = max |f(x) - f(y)| over refined-grid pairs with circular
/// distance <= delta, 0 < delta <= pi. Advisory continuity metadata; the
/// internal grid is refined until its spacing is well below delta.
double modulus_of_continuity(const PeriodicFunction& f, double delta);

/// Samples of the series on an arbitrary uniform grid of size target_n >= n
/// (zero-padded FFT synthesis, Nyquist term split across the +-n/2 bins).
Eigen::ArrayXd synthesize_samples(const FourierCoefficients& coeffs,
                                  double nyquist_cos, Eigen::Index grid_n,
                                  Eigen::Index target_n);

}  // namespace conjlab
