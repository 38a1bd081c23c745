#include "conjlab/kernels.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "conjlab/errors.hpp"

namespace conjlab {

namespace {
constexpr double kPi = std::numbers::pi_v<double>;

void check_radius(double r) {
  if (!(r >= 0.0) || r >= 1.0) {
    throw domain_error("radius must lie in [0, 1), got " + std::to_string(r));
  }
}
}  // namespace

double half_cot(double t) {
  if (!(t > 0.0) || t > kPi) {
    throw domain_error("half_cot argument must lie in (0, pi]");
  }
  if (t < 1e-2) {
    // Laurent expansion of (1/2) cot(t/2); next term is O(t^5).
    return 1.0 / t - t / 12.0 - t * t * t / 720.0;
  }
  return 0.5 / std::tan(0.5 * t);
}

double poisson_kernel(double r, double t) {
  check_radius(r);
  const double denom = 1.0 - 2.0 * r * std::cos(t) + r * r;
  return (1.0 - r * r) / (2.0 * denom);
}

double conj_poisson_kernel(double r, double t) {
  check_radius(r);
  const double denom = 1.0 - 2.0 * r * std::cos(t) + r * r;
  return r * std::sin(t) / denom;
}

TruncationMoments truncated_moments(Eigen::Index m, double h) {
  if (m < 1) throw domain_error("moment count must be >= 1");
  if (!(h > 0.0) || h > kPi) {
    throw domain_error("truncation h must lie in (0, pi]");
  }
  TruncationMoments out;
  out.h = h;
  out.tau.resize(m);
  // tau_k(h) = (1/pi) [ (pi - h) - 2 S_{k-1} - sin(kh)/k ],
  // S_k = sum_{j<=k} sin(jh)/j accumulated once across k.
  double partial = 0.0;
  for (Eigen::Index k = 1; k <= m; ++k) {
    const double sk = std::sin(static_cast<double>(k) * h) / static_cast<double>(k);
    out.tau[k - 1] = ((kPi - h) - 2.0 * partial - sk) / kPi;
    partial += sk;
  }
  return out;
}

}  // namespace conjlab
