#include "conjlab/diagnostics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <mutex>
#include <numbers>
#include <thread>
#include <vector>

#include "conjlab/errors.hpp"

namespace conjlab {

namespace {

constexpr double kPi = std::numbers::pi_v<double>;

// Runs body(i) for i in [0, count) on up to `threads` workers. Each index
// writes only its own output slot, so results are schedule-independent.
void parallel_for(Eigen::Index count, int threads,
                  const std::function<void(Eigen::Index)>& body) {
  int width = threads > 0 ? threads
                          : static_cast<int>(std::thread::hardware_concurrency());
  width = std::clamp<int>(width, 1, static_cast<int>(count));
  if (width == 1) {
    for (Eigen::Index i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<Eigen::Index> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  pool.reserve(static_cast<std::size_t>(width));
  for (int w = 0; w < width; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const Eigen::Index i = next.fetch_add(1);
        if (i >= count) return;
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::UniformlyConvergent: return "uniformly-convergent";
    case Verdict::Inconclusive: return "inconclusive";
    case Verdict::NonUniformTrend: return "non-uniform-trend";
  }
  return "inconclusive";
}

Verdict verdict_from_string(std::string_view s) {
  if (s == "uniformly-convergent") return Verdict::UniformlyConvergent;
  if (s == "inconclusive") return Verdict::Inconclusive;
  if (s == "non-uniform-trend") return Verdict::NonUniformTrend;
  throw input_error("unknown verdict: " + std::string(s));
}

double default_h_min(const Grid& grid) {
  return std::max(kTwoPi / static_cast<double>(grid.size()), 1e-5);
}

ConvergenceProfile zamansky_profile(const PeriodicFunction& f, int h_count,
                                    double h_max, double h_min, int oversample,
                                    int threads) {
  if (h_count < 3) throw domain_error("profile needs at least 3 h values");
  if (!(h_min > 0.0) || !(h_min < h_max) || h_max > kPi) {
    throw domain_error("profile range requires 0 < h_min < h_max <= pi");
  }

  ConvergenceProfile p;
  p.h_values.resize(h_count);
  p.sup_dev.resize(h_count);
  p.cauchy.resize(h_count);
  const double ratio = std::pow(h_min / h_max, 1.0 / (h_count - 1));
  for (int i = 0; i < h_count; ++i) {
    p.h_values[i] = i + 1 == h_count ? h_min : h_max * std::pow(ratio, i);
  }

  const PeriodicFunction reference = conj_spectral(f);
  parallel_for(h_count, threads, [&](Eigen::Index i) {
    const double h = p.h_values[i];
    const PeriodicFunction at_h = truncated_conjugate_fast(f, h);
    const PeriodicFunction at_half = truncated_conjugate_fast(f, h / 2.0);
    p.sup_dev[i] = sup_norm(at_h - reference, oversample);
    p.cauchy[i] = sup_norm(at_h - at_half, oversample);
  });
  return p;
}

DiagnosticReport classify_convergence(const ConvergenceProfile& profile,
                                      const ClassifyOptions& opts) {
  const Eigen::Index count = profile.size();
  if (count < 3) throw input_error("profile must have at least 3 rows");

  DiagnosticReport report;
  report.profile = profile;

  // Power-law fit over the smallest-h half (rows are ordered h decreasing).
  const Eigen::Index half_start = count / 2;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  Eigen::Index used = 0;
  for (Eigen::Index i = half_start; i < count; ++i) {
    const double m = profile.sup_dev[i];
    if (!(m > 0.0)) continue;
    const double lx = std::log(profile.h_values[i]);
    const double ly = std::log(m);
    sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
    ++used;
  }
  const double det = used * sxx - sx * sx;
  if (used >= 2 && std::abs(det) > 0.0) {
    report.fitted_decay.alpha = (used * sxy - sx * sy) / det;
    report.fitted_decay.constant = std::exp((sy * sxx - sx * sxy) / det);
    report.fitted_decay.degenerate = false;
  } else {
    report.fitted_decay.alpha = std::numeric_limits<double>::quiet_NaN();
    report.fitted_decay.constant = std::numeric_limits<double>::quiet_NaN();
    report.fitted_decay.degenerate = true;
    report.notes.push_back(
        "decay fit degenerate: fewer than two positive deviations in the "
        "small-h window");
  }

  const double m_final = profile.sup_dev[count - 1];
  const double alpha = report.fitted_decay.alpha;

  // Nondecreasing M over the smallest-h third signals stagnation.
  const auto third = static_cast<Eigen::Index>(std::ceil(count / 3.0));
  bool nondecreasing_tail = count - third < count - 1;
  for (Eigen::Index i = count - third; i + 1 < count; ++i) {
    if (!(profile.sup_dev[i + 1] >= profile.sup_dev[i])) {
      nondecreasing_tail = false;
      break;
    }
  }

  if (m_final < opts.tol_abs &&
      (report.fitted_decay.degenerate || alpha >= opts.alpha_min)) {
    report.verdict = Verdict::UniformlyConvergent;
  } else if (nondecreasing_tail ||
             (m_final > 10.0 * opts.tol_abs &&
              !report.fitted_decay.degenerate && alpha < 0.05)) {
    report.verdict = Verdict::NonUniformTrend;
  } else {
    report.verdict = Verdict::Inconclusive;
  }

  report.notes.push_back(
      "finite-resolution verdict: certifies behavior at the probed h range "
      "only, not the asymptotic limit");
  return report;
}

TheoremAReport theorem_a_report(const PeriodicFunction& f,
                                std::span<const double> r_values,
                                int oversample, int threads) {
  const auto count = static_cast<Eigen::Index>(r_values.size());
  if (count == 0) throw domain_error("at least one radius required");
  for (std::size_t i = 0; i < r_values.size(); ++i) {
    if (!(r_values[i] >= 0.0) || r_values[i] > 1.0 - 1e-6) {
      throw domain_error("radii must lie in [0, 1 - 1e-6]");
    }
    if (i > 0 && !(r_values[i] > r_values[i - 1])) {
      throw domain_error("radii must be increasing");
    }
  }

  TheoremAReport report;
  report.r_values.resize(count);
  report.gap.resize(count);
  report.abel_gap.resize(count);
  report.truncation_gap.resize(count);
  const PeriodicFunction reference = conj_spectral(f);
  parallel_for(count, threads, [&](Eigen::Index i) {
    const double r = r_values[static_cast<std::size_t>(i)];
    report.r_values[i] = r;
    const PeriodicFunction abel = abel_conjugate(f, r);
    const PeriodicFunction truncated = truncated_conjugate_fast(f, 1.0 - r);
    report.gap[i] = sup_norm(abel - truncated, oversample);
    report.abel_gap[i] = sup_norm(abel - reference, oversample);
    report.truncation_gap[i] = sup_norm(reference - truncated, oversample);
  });
  return report;
}

DiscAlgebraResult disc_algebra_test(const PeriodicFunction& u,
                                    const DiagnosticConfig& config) {
  const double h_min =
      config.h_min > 0.0 ? config.h_min : default_h_min(u.grid());
  double h_max = config.h_max;
  std::string widened_note;
  if (config.h_min <= 0.0 && h_min >= h_max) {
    // Coarse grids push the automatic floor past the default ceiling
    // (2*pi/n >= 1 once n <= 6); widen to the full range instead of failing.
    h_max = kPi;
    widened_note = "profile ceiling widened to pi: the grid's h floor " +
                   std::to_string(h_min) + " exceeds the requested h_max";
  }
  ConvergenceProfile profile =
      zamansky_profile(u, config.h_count, h_max, h_min, config.oversample,
                       config.threads);
  DiagnosticReport report = classify_convergence(profile, config.classify);
  if (!widened_note.empty()) report.notes.push_back(widened_note);

  // Advisory continuity check: a swing of more than half the range within a
  // few grid cells suggests under-resolved or discontinuous-looking input.
  const double scale = sup_norm(u, config.oversample);
  if (scale > 0.0) {
    const double delta = 8.0 * u.grid().spacing();
    const double omega = modulus_of_continuity(u, std::min(delta, kPi));
    if (omega > scale) {
      report.notes.push_back(
          "modulus of continuity omega(8*spacing) exceeds half the range; "
          "sampled data may be under-resolved");
    }
  }

  return DiscAlgebraResult{std::move(report), analytic_extension(u)};
}

}  // namespace conjlab
