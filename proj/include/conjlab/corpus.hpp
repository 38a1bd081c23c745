#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "conjlab/diagnostics.hpp"
#include "conjlab/periodic_function.hpp"

namespace conjlab {

/// A boundary function with known conjugate behavior, bundled with its
/// oracle data. expected_verdict records the family's limit behavior; the
/// provenance note states at what resolution the classifier reproduces it.
struct CorpusEntry {
  std::string name;
  PeriodicFunction f;
  std::optional<PeriodicFunction> exact_conjugate;
  std::optional<PeriodicFunction> antiderivative;
  Verdict expected_verdict = Verdict::Inconclusive;
  std::string provenance;
};

/// Random trigonometric polynomial: coefficients uniform in [-1, 1] drawn
/// deterministically from the seed, zero mean, 1 <= degree < n/2. Carries
/// its exact conjugate and termwise antiderivative.
CorpusEntry trig_poly(std::uint64_t seed, Eigen::Index degree,
                      Eigen::Index grid_n);

/// f = sum_{k=2}^{N} sin(kx)/(k ln k): uniformly bounded in N, but the
/// conjugate partial sums -sum cos(kx)/(k ln k) grow like ln ln N at x = 0.
/// The classical failure mode the uniform-convergence criterion must flag.
/// Requires 4 <= N <= n/2 - 1.
CorpusEntry log_sine_series(Eigen::Index terms, Eigen::Index grid_n);

/// f = |sin(x/2)|^alpha, 0 < alpha < 1: a Holder cusp with continuous
/// conjugate (positive branch of the criterion). No closed-form conjugate;
/// the spectral conjugate of the interpolant is the reference.
CorpusEntry holder_cusp(double alpha, Eigen::Index grid_n);

}  // namespace conjlab
