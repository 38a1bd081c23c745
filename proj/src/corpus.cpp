#include "conjlab/corpus.hpp"

#include <cmath>
#include <string>

#include "conjlab/errors.hpp"
#include "conjlab/transforms.hpp"

namespace conjlab {

namespace {

// splitmix64: tiny, deterministic across platforms, good enough for
// test-vector coefficients.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [-1, 1).
  double symmetric() {
    const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;  // [0,1)
    return 2.0 * u - 1.0;
  }

 private:
  std::uint64_t state_;
};

// Termwise antiderivative with zero mean: integral of a_k cos kx + b_k sin kx
// is (a_k/k) sin kx - (b_k/k) cos kx. Requires a0 = 0.
FourierCoefficients antiderivative_coeffs(const FourierCoefficients& c) {
  FourierCoefficients F;
  F.a0 = 0.0;
  F.cos_coeffs.resize(c.size());
  F.sin_coeffs.resize(c.size());
  for (Eigen::Index k = 1; k <= c.size(); ++k) {
    F.cos_coeffs[k - 1] = -c.sin_coeffs[k - 1] / static_cast<double>(k);
    F.sin_coeffs[k - 1] = c.cos_coeffs[k - 1] / static_cast<double>(k);
  }
  return F;
}

}  // namespace

CorpusEntry trig_poly(std::uint64_t seed, Eigen::Index degree,
                      Eigen::Index grid_n) {
  const Grid grid(grid_n);
  if (degree < 1 || degree >= grid_n / 2) {
    throw domain_error("trig_poly degree must satisfy 1 <= degree < n/2");
  }
  SplitMix64 rng(seed);
  FourierCoefficients c;
  c.a0 = 0.0;  // zero mean, so the termwise antiderivative is periodic
  c.cos_coeffs = Eigen::ArrayXd::Zero(degree);
  c.sin_coeffs = Eigen::ArrayXd::Zero(degree);
  for (Eigen::Index k = 0; k < degree; ++k) c.cos_coeffs[k] = rng.symmetric();
  for (Eigen::Index k = 0; k < degree; ++k) c.sin_coeffs[k] = rng.symmetric();

  CorpusEntry entry{
      "trig_poly",
      from_coefficients(grid, c),
      std::nullopt,
      std::nullopt,
      Verdict::UniformlyConvergent,
      "seeded trig polynomial (seed " + std::to_string(seed) + ", degree " +
          std::to_string(degree) +
          "); conjugate by the multiplier, antiderivative termwise; "
          "classifies uniformly-convergent once the grid resolves the "
          "default tolerance",
  };
  entry.exact_conjugate = conj_spectral(entry.f);
  entry.antiderivative = from_coefficients(grid, antiderivative_coeffs(c));
  return entry;
}

CorpusEntry log_sine_series(Eigen::Index terms, Eigen::Index grid_n) {
  const Grid grid(grid_n);
  if (terms < 4 || terms > grid_n / 2 - 1) {
    throw domain_error("log_sine_series requires 4 <= N <= n/2 - 1");
  }
  const Eigen::Index m = grid.max_degree();
  FourierCoefficients c;
  c.a0 = 0.0;
  c.cos_coeffs = Eigen::ArrayXd::Zero(m);
  c.sin_coeffs = Eigen::ArrayXd::Zero(m);
  for (Eigen::Index k = 2; k <= terms; ++k) {
    c.sin_coeffs[k - 1] =
        1.0 / (static_cast<double>(k) * std::log(static_cast<double>(k)));
  }

  CorpusEntry entry{
      "log_sine_series",
      from_coefficients(grid, c),
      std::nullopt,
      std::nullopt,
      Verdict::NonUniformTrend,
      "sum_{k=2}^{N} sin(kx)/(k ln k), N = " + std::to_string(terms) +
          "; bounded uniformly in N while the conjugate grows like ln ln N "
          "at x = 0; at finite resolution the classifier reports a "
          "non-convergent (not uniformly-convergent) profile",
  };
  entry.exact_conjugate = conj_spectral(entry.f);
  entry.antiderivative = from_coefficients(grid, antiderivative_coeffs(c));
  return entry;
}

CorpusEntry holder_cusp(double alpha, Eigen::Index grid_n) {
  const Grid grid(grid_n);
  if (!(alpha > 0.0) || !(alpha < 1.0)) {
    throw domain_error("holder_cusp exponent must lie in (0, 1)");
  }
  Eigen::ArrayXd samples(grid_n);
  for (Eigen::Index j = 0; j < grid_n; ++j) {
    samples[j] = std::pow(std::abs(std::sin(grid.point(j) / 2.0)), alpha);
  }
  return CorpusEntry{
      "holder_cusp",
      analyze(grid, samples),
      std::nullopt,  // no closed-form conjugate; conj_spectral is reference
      std::nullopt,  // no closed-form antiderivative supplied
      Verdict::UniformlyConvergent,
      "|sin(x/2)|^alpha, alpha = " + std::to_string(alpha) +
          "; Holder-continuous with continuous conjugate. Detection needs "
          "resolution: at defaults the classifier reaches "
          "uniformly-convergent for alpha = 0.75 once n >= 32768",
  };
}

}  // namespace conjlab
