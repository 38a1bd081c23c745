#pragma once

#include <Eigen/Core>

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "conjlab/periodic_function.hpp"
#include "conjlab/transforms.hpp"

namespace conjlab {

/// Uniform-convergence profile of the truncated conjugate integral:
/// for each h (strictly decreasing), the sup deviation from the reference
/// conjugate M(h) = sup |f~(x,h) - f~(x)| and the Cauchy difference
/// D(h) = sup |f~(x,h) - f~(x,h/2)|.
struct ConvergenceProfile {
  Eigen::ArrayXd h_values;
  Eigen::ArrayXd sup_dev;  ///< M(h)
  Eigen::ArrayXd cauchy;   ///< D(h)

  Eigen::Index size() const { return h_values.size(); }
};

enum class Verdict {
  UniformlyConvergent,
  Inconclusive,
  NonUniformTrend,
};

std::string_view to_string(Verdict v);
Verdict verdict_from_string(std::string_view s);

/// Least-squares power law M(h) ~ constant * h^alpha fitted over the
/// smallest-h half of a profile. degenerate is set when fewer than two
/// positive M values were available (then alpha and constant are NaN).
struct FittedDecay {
  double alpha = 0.0;
  double constant = 0.0;
  bool degenerate = false;
};

struct DiagnosticReport {
  Verdict verdict = Verdict::Inconclusive;
  FittedDecay fitted_decay;
  ConvergenceProfile profile;
  std::vector<std::string> notes;
};

struct ClassifyOptions {
  double tol_abs = 1e-3;
  double alpha_min = 0.3;
};

/// Default profile floor max(2*pi/n, 1e-5): probing below the grid's
/// resolution is meaningless for an interpolant.
double default_h_min(const Grid& grid);

/// Sweeps h geometrically from h_max down to h_min (h_count >= 3 points,
/// 0 < h_min < h_max <= pi) and measures M and D with
/// truncated_conjugate_fast and sup_norm at the given oversampling.
/// Rows are independent; the sweep runs on `threads` workers (0 = all).
ConvergenceProfile zamansky_profile(const PeriodicFunction& f, int h_count,
                                    double h_max, double h_min,
                                    int oversample = 8, int threads = 0);

/// Decision rule (finite-resolution proxy for the asymptotic criterion):
///   uniformly-convergent  if M(h_min) < tol_abs and alpha >= alpha_min
///                         (a degenerate fit, e.g. M == 0, counts as passing
///                         the slope clause);
///   non-uniform-trend     if M is nondecreasing over the smallest-h third,
///                         or M(h_min) > 10*tol_abs with alpha < 0.05;
///   inconclusive          otherwise.
/// Requires at least 3 profile rows.
DiagnosticReport classify_convergence(const ConvergenceProfile& profile,
                                      const ClassifyOptions& opts = {});

/// Gap data for the Abel-mean / truncated-integral comparison at h = 1 - r:
///   gap    G(r)  = sup |f~(r,x) - f~(x, 1-r)|
///   abel   G1(r) = sup |f~(r,x) - f~(x)|
///   trunc  G2(r) = sup |f~(x) - f~(x, 1-r)|
/// with G <= G1 + G2 row by row.
struct TheoremAReport {
  Eigen::ArrayXd r_values;
  Eigen::ArrayXd gap;
  Eigen::ArrayXd abel_gap;
  Eigen::ArrayXd truncation_gap;

  Eigen::Index size() const { return r_values.size(); }
};

/// r_values must be increasing, within [0, 1 - 1e-6].
TheoremAReport theorem_a_report(const PeriodicFunction& f,
                                std::span<const double> r_values,
                                int oversample = 8, int threads = 0);

struct DiagnosticConfig {
  int h_count = 24;
  double h_max = 1.0;
  double h_min = 0.0;  ///< 0 -> default_h_min(grid)
  ClassifyOptions classify;
  int oversample = 8;
  int threads = 0;  ///< 0 -> available parallelism
};

struct DiscAlgebraResult {
  DiagnosticReport report;
  AnalyticExtension extension;
};

/// The executable membership question: profiles u, classifies, and returns
/// the candidate analytic extension regardless of verdict so the caller can
/// inspect it. Verdict "uniformly-convergent" means u passes the
/// uniform-convergence criterion at this resolution; a certificate of the
/// asymptotic property is impossible from finite data, and the report's
/// notes say so.
DiscAlgebraResult disc_algebra_test(const PeriodicFunction& u,
                                    const DiagnosticConfig& config = {});

}  // namespace conjlab
