#pragma once

#include <Eigen/Core>

namespace conjlab {

/// (1/2) cot(t/2) for t in (0, pi]: the singular factor of the conjugate
/// integral. Positive, decreasing, ~ 1/t near 0. Evaluated by a Laurent
/// expansion below t = 1e-2 to avoid cancellation in cot.
double half_cot(double t);

/// Poisson kernel P(r, t) = (1 - r^2) / (2 (1 - 2 r cos t + r^2)), r in [0,1).
/// Normalized so the integral over (-pi, pi] is pi.
double poisson_kernel(double r, double t);

/// Conjugate Poisson kernel Q(r, t) = r sin t / (1 - 2 r cos t + r^2),
/// r in [0,1). Odd in t; Q = sum_{k>=1} r^k sin kt.
double conj_poisson_kernel(double r, double t);

/// Exact truncated-kernel moments
///
///   tau_k(h) = (1/pi) integral_h^pi sin(kt) cot(t/2) dt
///            = (1/pi) [ (pi - h) - 2 sum_{j=1}^{k-1} sin(jh)/j - sin(kh)/k ],
///
/// the per-harmonic attenuation of the truncated conjugate integral:
/// tau_k(pi) = 0, tau_k(h) -> 1 as h -> 0.
struct TruncationMoments {
  double h = 0.0;
  Eigen::ArrayXd tau;  ///< tau[k-1] = tau_k(h), k = 1..m

  Eigen::Index size() const { return tau.size(); }
  double at(Eigen::Index k) const { return tau[k - 1]; }
};

/// Computes tau_1(h)..tau_m(h) by the O(m) partial-sum recurrence.
/// Requires m >= 1 and 0 < h <= pi.
TruncationMoments truncated_moments(Eigen::Index m, double h);

}  // namespace conjlab
