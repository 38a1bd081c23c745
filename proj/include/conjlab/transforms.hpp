#pragma once

#include <Eigen/Core>

#include <complex>
#include <span>

#include "conjlab/periodic_function.hpp"
#include "conjlab/quadrature.hpp"

namespace conjlab {

/// Boundary conjugate function: the conjugate-series multiplier
/// cos kx -> sin kx, sin kx -> -cos kx, constant -> 0. The conjugate has
/// zero mean; the Nyquist residual of f is dropped (its conjugate sine
/// vanishes identically on the grid).
PeriodicFunction conj_spectral(const PeriodicFunction& f);

/// Truncated conjugate integral
///
///   x -> -(1/pi) integral_h^pi [f(x+t) - f(x-t)] (1/2) cot(t/2) dt
///
/// computed exactly through the moments: conj_spectral(f) attenuated
/// per-harmonic by tau_k(h). Requires 0 < h <= pi.
PeriodicFunction truncated_conjugate_fast(const PeriodicFunction& f, double h);

/// Same integral, evaluated directly at one point by adaptive graded
/// Gauss-Legendre quadrature. Cross-validates the spectral path.
/// opts.rel_tol must lie in [1e-13, 1e-4]; runs against a scale of
/// max(|integral|, 1), so near-zero values are resolved absolutely.
QuadratureResult truncated_conjugate_quadrature(const PeriodicFunction& f,
                                                double x, double h,
                                                const QuadratureOptions& opts = {});

/// Abel means of the conjugate series: conj_spectral(f) damped by r^k.
/// Equals the convolution of f with the conjugate Poisson kernel.
/// Requires 0 <= r < 1.
PeriodicFunction abel_conjugate(const PeriodicFunction& f, double r);

/// One-sided power-series coefficients of f = u + i*conj(u):
/// c0 = a0/2 (kept real), c_k = a_k - i b_k. Evaluable on the closed disc.
struct AnalyticExtension {
  double c0 = 0.0;
  Eigen::ArrayXcd coeffs;  ///< c_k, k = 1..m

  Eigen::Index size() const { return coeffs.size(); }
};

AnalyticExtension analytic_extension(const PeriodicFunction& u);

/// Horner evaluation of c0 + sum c_k z^k at z = r e^{i theta}, 0 <= r <= 1.
/// At r = 1 the real part reproduces u to interpolant accuracy.
std::complex<double> evaluate_extension(const AnalyticExtension& e, double r,
                                        double theta);

/// Symmetric second-difference probe of Zygmund smoothness:
/// defects[i] = (F(x + t_i) + F(x - t_i) - 2 F(x)) / t_i. No decision is
/// made here; smoothness (defect -> 0) is asymptotic and the caller reads
/// the trend.
struct SmoothnessProbe {
  double base_point = 0.0;
  Eigen::ArrayXd scales;   ///< strictly decreasing, positive
  Eigen::ArrayXd defects;
};

SmoothnessProbe smoothness_defect(const PeriodicFunction& F, double x,
                                  std::span<const double> scales);

}  // namespace conjlab
