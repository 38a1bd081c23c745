#include "conjlab/transforms.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "conjlab/errors.hpp"
#include "conjlab/kernels.hpp"

namespace conjlab {

namespace {
constexpr double kPi = std::numbers::pi_v<double>;

// Conjugate-series coefficients of f, optionally attenuated per harmonic:
// cos coeff of f~ is -b_k * damp_k, sin coeff is a_k * damp_k.
FourierCoefficients conjugate_coeffs(const FourierCoefficients& c,
                                     const Eigen::ArrayXd* damping) {
  FourierCoefficients out;
  out.a0 = 0.0;
  if (damping != nullptr) {
    out.cos_coeffs = -c.sin_coeffs * (*damping);
    out.sin_coeffs = c.cos_coeffs * (*damping);
  } else {
    out.cos_coeffs = -c.sin_coeffs;
    out.sin_coeffs = c.cos_coeffs;
  }
  return out;
}
}  // namespace

PeriodicFunction conj_spectral(const PeriodicFunction& f) {
  return from_coefficients(f.grid(), conjugate_coeffs(f.coeffs(), nullptr));
}

PeriodicFunction truncated_conjugate_fast(const PeriodicFunction& f, double h) {
  if (!(h > 0.0) || h > kPi) {
    throw domain_error("truncation h must lie in (0, pi]");
  }
  const Eigen::Index m = f.coeffs().size();
  const TruncationMoments moments = truncated_moments(m, h);
  return from_coefficients(f.grid(), conjugate_coeffs(f.coeffs(), &moments.tau));
}

QuadratureResult truncated_conjugate_quadrature(const PeriodicFunction& f,
                                                double x, double h,
                                                const QuadratureOptions& opts) {
  if (!(h > 0.0) || h > kPi) {
    throw domain_error("truncation h must lie in (0, pi]");
  }
  if (h == kPi) return QuadratureResult{0.0, 0.0, 0};

  const auto integrand = [&f, x](double t) {
    return (evaluate(f, x + t) - evaluate(f, x - t)) * half_cot(t);
  };
  QuadratureResult r = integrate_graded(integrand, h, kPi, opts);
  r.value = -r.value / kPi;
  r.error_estimate /= kPi;
  return r;
}

PeriodicFunction abel_conjugate(const PeriodicFunction& f, double r) {
  if (!(r >= 0.0) || r >= 1.0) {
    throw domain_error("Abel radius must lie in [0, 1)");
  }
  const Eigen::Index m = f.coeffs().size();
  Eigen::ArrayXd damping(m);
  double rk = 1.0;
  for (Eigen::Index k = 0; k < m; ++k) {
    rk *= r;
    damping[k] = rk;
  }
  return from_coefficients(f.grid(), conjugate_coeffs(f.coeffs(), &damping));
}

AnalyticExtension analytic_extension(const PeriodicFunction& u) {
  const auto& c = u.coeffs();
  AnalyticExtension e;
  e.c0 = c.a0 / 2.0;
  e.coeffs.resize(c.size());
  for (Eigen::Index k = 0; k < c.size(); ++k) {
    e.coeffs[k] = std::complex<double>(c.cos_coeffs[k], -c.sin_coeffs[k]);
  }
  return e;
}

std::complex<double> evaluate_extension(const AnalyticExtension& e, double r,
                                        double theta) {
  if (!(r >= 0.0) || r > 1.0) {
    throw domain_error("disc radius must lie in [0, 1]");
  }
  const std::complex<double> z = std::polar(r, theta);
  std::complex<double> acc{0.0, 0.0};
  for (Eigen::Index k = e.coeffs.size(); k >= 1; --k) {
    acc = (acc + e.coeffs[k - 1]) * z;
  }
  return acc + e.c0;
}

SmoothnessProbe smoothness_defect(const PeriodicFunction& F, double x,
                                  std::span<const double> scales) {
  if (scales.empty()) throw domain_error("at least one probe scale required");
  for (std::size_t i = 0; i < scales.size(); ++i) {
    if (!(scales[i] > 0.0)) throw domain_error("probe scales must be positive");
    if (i > 0 && !(scales[i] < scales[i - 1])) {
      throw domain_error("probe scales must be strictly decreasing");
    }
  }
  SmoothnessProbe probe;
  probe.base_point = x;
  probe.scales.resize(static_cast<Eigen::Index>(scales.size()));
  probe.defects.resize(static_cast<Eigen::Index>(scales.size()));
  const double center = 2.0 * evaluate(F, x);
  for (std::size_t i = 0; i < scales.size(); ++i) {
    const double t = scales[i];
    probe.scales[static_cast<Eigen::Index>(i)] = t;
    probe.defects[static_cast<Eigen::Index>(i)] =
        (evaluate(F, x + t) + evaluate(F, x - t) - center) / t;
  }
  return probe;
}

}  // namespace conjlab
