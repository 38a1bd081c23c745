#pragma once

#include <functional>

namespace conjlab {

struct QuadratureOptions {
  double rel_tol = 1e-10;  ///< accepted range [1e-13, 1e-4]
  int max_panels = 20000;  ///< total panel budget before convergence_error
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int panels_used = 0;
};

/// Adaptive composite 16-point Gauss-Legendre quadrature of f over [a, b],
/// 0 < a < b, on geometrically graded base panels [a*2^j, a*2^(j+1)] (the
/// integrand's derivative blows up toward the left endpoint; geometric
/// grading equidistributes the error). Each panel is bisected until its
/// estimated error fits within the panel's share of rel_tol * scale, where
/// scale = max(|rough total|, 1).
///
/// Throws convergence_error (carrying the best estimate) if the panel budget
/// runs out, domain_error on a bad interval or tolerance.
QuadratureResult integrate_graded(const std::function<double(double)>& f,
                                  double a, double b,
                                  const QuadratureOptions& opts = {});

}  // namespace conjlab
