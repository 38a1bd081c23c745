// Test-side reference implementations, deliberately independent of the
// library's evaluation paths: adaptive Simpson (vs Gauss-Legendre panels),
// naive per-term trig sums (vs FFT synthesis), and an O(n^2) DFT.
#pragma once

#include <Eigen/Core>

#include <cmath>
#include <functional>
#include <numbers>

namespace oracle {

inline constexpr double kPi = std::numbers::pi_v<double>;

inline double simpson(const std::function<double(double)>& f, double a,
                      double b) {
  const double m = 0.5 * (a + b);
  return (b - a) / 6.0 * (f(a) + 4.0 * f(m) + f(b));
}

inline double adaptive_simpson_rec(const std::function<double(double)>& f,
                                   double a, double b, double whole,
                                   double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double left = simpson(f, a, m);
  const double right = simpson(f, m, b);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return adaptive_simpson_rec(f, a, m, left, tol / 2.0, depth - 1) +
         adaptive_simpson_rec(f, m, b, right, tol / 2.0, depth - 1);
}

/// Adaptive Simpson with absolute tolerance.
inline double integrate(const std::function<double(double)>& f, double a,
                        double b, double tol = 1e-11) {
  return adaptive_simpson_rec(f, a, b, simpson(f, a, b), tol, 60);
}

/// Direct evaluation of a0/2 + sum a_k cos kx + b_k sin kx, one std::sin and
/// std::cos call per term.
inline double trig_sum(double a0, const Eigen::ArrayXd& cos_coeffs,
                       const Eigen::ArrayXd& sin_coeffs, double x) {
  double acc = a0 / 2.0;
  for (Eigen::Index k = 1; k <= cos_coeffs.size(); ++k) {
    acc += cos_coeffs[k - 1] * std::cos(k * x) +
           sin_coeffs[k - 1] * std::sin(k * x);
  }
  return acc;
}

/// O(n^2) discrete Fourier analysis in the conventional normalization.
struct NaiveAnalysis {
  double a0;
  Eigen::ArrayXd cos_coeffs;  // k = 1..m
  Eigen::ArrayXd sin_coeffs;
  double nyquist;
};

inline NaiveAnalysis naive_analyze(const Eigen::ArrayXd& samples) {
  const Eigen::Index n = samples.size();
  const Eigen::Index m = n / 2 - 1;
  NaiveAnalysis out;
  out.cos_coeffs.resize(m);
  out.sin_coeffs.resize(m);
  const double scale = 2.0 / static_cast<double>(n);
  double s0 = 0.0, sn = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    s0 += samples[j];
    sn += samples[j] * ((j % 2 == 0) ? 1.0 : -1.0);
  }
  out.a0 = scale * s0;
  out.nyquist = scale * sn;
  for (Eigen::Index k = 1; k <= m; ++k) {
    double sc = 0.0, ss = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      const double x = 2.0 * kPi * j / static_cast<double>(n);
      sc += samples[j] * std::cos(k * x);
      ss += samples[j] * std::sin(k * x);
    }
    out.cos_coeffs[k - 1] = scale * sc;
    out.sin_coeffs[k - 1] = scale * ss;
  }
  return out;
}

/// Closed-form tau_k(h), summed directly (no recurrence).
inline double tau_closed_form(int k, double h) {
  double s = 0.0;
  for (int j = 1; j < k; ++j) s += std::sin(j * h) / j;
  return ((kPi - h) - 2.0 * s - std::sin(k * h) / k) / kPi;
}

}  // namespace oracle
