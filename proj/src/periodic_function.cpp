#include "conjlab/periodic_function.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <complex>
#include <deque>
#include <string>
#include <vector>

#include "conjlab/errors.hpp"

namespace conjlab {

namespace {

using Complex = std::complex<double>;

std::vector<Complex> fft_forward(const Eigen::ArrayXd& samples) {
  const auto n = samples.size();
  std::vector<Complex> in(static_cast<std::size_t>(n)), out;
  for (Eigen::Index j = 0; j < n; ++j) in[static_cast<std::size_t>(j)] = samples[j];
  Eigen::FFT<double> fft;
  fft.fwd(out, in);
  return out;
}

}  // namespace

Eigen::Index FourierCoefficients::degree() const {
  for (Eigen::Index k = size(); k >= 1; --k) {
    if (cos_coeffs[k - 1] != 0.0 || sin_coeffs[k - 1] != 0.0) return k;
  }
  return 0;
}

void FourierCoefficients::validate() const {
  if (cos_coeffs.size() != sin_coeffs.size()) {
    throw input_error("cos/sin coefficient arrays differ in length");
  }
  if (!std::isfinite(a0) || !cos_coeffs.isFinite().all() ||
      !sin_coeffs.isFinite().all()) {
    throw input_error("non-finite Fourier coefficient");
  }
}

PeriodicFunction::PeriodicFunction(const Grid& grid, Eigen::ArrayXd samples,
                                   FourierCoefficients coeffs,
                                   double nyquist_cos)
    : grid_(grid),
      samples_(std::move(samples)),
      coeffs_(std::move(coeffs)),
      nyquist_cos_(nyquist_cos) {
  if (samples_.size() != grid_.size()) {
    throw input_error("sample count does not match grid size");
  }
  if (coeffs_.size() != grid_.max_degree()) {
    throw input_error("coefficient count must be n/2 - 1");
  }
  coeffs_.validate();
  if (!samples_.isFinite().all() || !std::isfinite(nyquist_cos_)) {
    throw input_error("non-finite sample data");
  }
  degree_ = coeffs_.degree();
}

PeriodicFunction PeriodicFunction::operator+(const PeriodicFunction& rhs) const {
  if (!(grid_ == rhs.grid_)) throw domain_error("grid mismatch in +");
  FourierCoefficients c{coeffs_.a0 + rhs.coeffs_.a0,
                        coeffs_.cos_coeffs + rhs.coeffs_.cos_coeffs,
                        coeffs_.sin_coeffs + rhs.coeffs_.sin_coeffs};
  return PeriodicFunction(grid_, samples_ + rhs.samples_, std::move(c),
                          nyquist_cos_ + rhs.nyquist_cos_);
}

PeriodicFunction PeriodicFunction::operator-(const PeriodicFunction& rhs) const {
  if (!(grid_ == rhs.grid_)) throw domain_error("grid mismatch in -");
  FourierCoefficients c{coeffs_.a0 - rhs.coeffs_.a0,
                        coeffs_.cos_coeffs - rhs.coeffs_.cos_coeffs,
                        coeffs_.sin_coeffs - rhs.coeffs_.sin_coeffs};
  return PeriodicFunction(grid_, samples_ - rhs.samples_, std::move(c),
                          nyquist_cos_ - rhs.nyquist_cos_);
}

PeriodicFunction PeriodicFunction::operator*(double scale) const {
  FourierCoefficients c{coeffs_.a0 * scale, coeffs_.cos_coeffs * scale,
                        coeffs_.sin_coeffs * scale};
  return PeriodicFunction(grid_, samples_ * scale, std::move(c),
                          nyquist_cos_ * scale);
}

PeriodicFunction analyze(const Grid& grid, const Eigen::ArrayXd& samples) {
  const Eigen::Index n = grid.size();
  if (samples.size() != n) {
    throw input_error("expected " + std::to_string(n) + " samples, got " +
                      std::to_string(samples.size()));
  }
  if (!samples.isFinite().all()) throw input_error("non-finite sample");

  const auto spectrum = fft_forward(samples);
  const double scale = 2.0 / static_cast<double>(n);
  const Eigen::Index m = grid.max_degree();

  FourierCoefficients coeffs;
  coeffs.a0 = scale * spectrum[0].real();
  coeffs.cos_coeffs.resize(m);
  coeffs.sin_coeffs.resize(m);
  for (Eigen::Index k = 1; k <= m; ++k) {
    const auto& c = spectrum[static_cast<std::size_t>(k)];
    coeffs.cos_coeffs[k - 1] = scale * c.real();
    coeffs.sin_coeffs[k - 1] = -scale * c.imag();
  }
  const double nyquist = scale * spectrum[static_cast<std::size_t>(n / 2)].real();

  Eigen::ArrayXd clean = samples;
  return PeriodicFunction(grid, std::move(clean), std::move(coeffs), nyquist);
}

Eigen::ArrayXd synthesize_samples(const FourierCoefficients& coeffs,
                                  double nyquist_cos, Eigen::Index grid_n,
                                  Eigen::Index target_n) {
  if (target_n < grid_n) throw domain_error("synthesis target below grid size");
  const Eigen::Index m = coeffs.size();
  std::vector<Complex> spectrum(static_cast<std::size_t>(target_n), Complex{0.0, 0.0});
  // Bin values chosen so the inverse transform (which applies no scaling
  // here; we bake the 1/N in) returns the interpolant with the halved
  // Nyquist convention.
  spectrum[0] = Complex{coeffs.a0 / 2.0, 0.0};
  for (Eigen::Index k = 1; k <= m; ++k) {
    const Complex c{coeffs.cos_coeffs[k - 1] / 2.0, -coeffs.sin_coeffs[k - 1] / 2.0};
    spectrum[static_cast<std::size_t>(k)] = c;
    spectrum[static_cast<std::size_t>(target_n - k)] = std::conj(c);
  }
  const Eigen::Index kn = grid_n / 2;
  if (nyquist_cos != 0.0) {
    if (target_n == grid_n) {
      spectrum[static_cast<std::size_t>(kn)] += Complex{nyquist_cos / 2.0, 0.0};
    } else {
      // Split across the +-n/2 bins: synthesizes (nyquist_cos/2) cos(n/2 x).
      spectrum[static_cast<std::size_t>(kn)] += Complex{nyquist_cos / 4.0, 0.0};
      spectrum[static_cast<std::size_t>(target_n - kn)] += Complex{nyquist_cos / 4.0, 0.0};
    }
  }
  for (auto& c : spectrum) c *= static_cast<double>(target_n);

  Eigen::FFT<double> fft;
  std::vector<Complex> time;
  fft.inv(time, spectrum);

  Eigen::ArrayXd out(target_n);
  for (Eigen::Index j = 0; j < target_n; ++j) {
    out[j] = time[static_cast<std::size_t>(j)].real();
  }
  return out;
}

PeriodicFunction from_coefficients(const Grid& grid,
                                   const FourierCoefficients& coeffs) {
  coeffs.validate();
  const Eigen::Index m = grid.max_degree();
  if (coeffs.degree() > m) {
    throw input_error("coefficient degree " + std::to_string(coeffs.degree()) +
                      " exceeds grid capacity n/2 - 1 = " + std::to_string(m));
  }
  FourierCoefficients padded;
  padded.a0 = coeffs.a0;
  padded.cos_coeffs = Eigen::ArrayXd::Zero(m);
  padded.sin_coeffs = Eigen::ArrayXd::Zero(m);
  const Eigen::Index have = std::min(m, coeffs.size());
  padded.cos_coeffs.head(have) = coeffs.cos_coeffs.head(have);
  padded.sin_coeffs.head(have) = coeffs.sin_coeffs.head(have);

  Eigen::ArrayXd samples = synthesize_samples(padded, 0.0, grid.size(), grid.size());
  return PeriodicFunction(grid, std::move(samples), std::move(padded), 0.0);
}

double evaluate(const PeriodicFunction& f, double x) {
  double xr = std::fmod(x, kTwoPi);
  if (xr < 0.0) xr += kTwoPi;

  const auto& c = f.coeffs();
  double acc = c.a0 / 2.0;
  const Eigen::Index deg = f.degree();
  const double c1 = std::cos(xr), s1 = std::sin(xr);
  double ck = c1, sk = s1;
  for (Eigen::Index k = 1; k <= deg; ++k) {
    // Rotation recurrence, resynced periodically to hold roundoff near eps.
    if ((k & 63) == 0) {
      ck = std::cos(static_cast<double>(k) * xr);
      sk = std::sin(static_cast<double>(k) * xr);
    }
    acc += c.cos_coeffs[k - 1] * ck + c.sin_coeffs[k - 1] * sk;
    const double cn = ck * c1 - sk * s1;
    sk = sk * c1 + ck * s1;
    ck = cn;
  }
  if (f.nyquist_cos() != 0.0) {
    const double kn = static_cast<double>(f.grid().size() / 2);
    acc += (f.nyquist_cos() / 2.0) * std::cos(kn * xr);
  }
  return acc;
}

double sup_norm(const PeriodicFunction& f, int oversample) {
  if (oversample < 1) throw domain_error("oversample must be >= 1");
  const Eigen::Index target = f.grid().size() * oversample;
  const Eigen::ArrayXd vals =
      synthesize_samples(f.coeffs(), f.nyquist_cos(), f.grid().size(), target);
  return vals.abs().maxCoeff();
}

double modulus_of_continuity(const PeriodicFunction& f, double delta) {
  if (!(delta > 0.0) || delta > std::numbers::pi) {
    throw domain_error("delta must lie in (0, pi]");
  }
  const Eigen::Index n = f.grid().size();
  // Refine until the spacing is ~1e-3 * delta so near-delta pairs exist.
  Eigen::Index target = n * 8;
  const auto wanted = static_cast<Eigen::Index>(kTwoPi * 1024.0 / delta);
  while (target < wanted && target < (Eigen::Index{1} << 21)) target *= 2;

  const Eigen::ArrayXd vals =
      synthesize_samples(f.coeffs(), f.nyquist_cos(), n, target);
  const double spacing = kTwoPi / static_cast<double>(target);
  const auto window = static_cast<Eigen::Index>(std::floor(delta / spacing));
  if (window < 1) return 0.0;

  // Sliding-window max minus min over all circular windows of `window` steps.
  std::deque<Eigen::Index> maxq, minq;
  double worst = 0.0;
  const Eigen::Index total = target + window;  // wrap around once
  for (Eigen::Index i = 0; i < total; ++i) {
    const double v = vals[i % target];
    while (!maxq.empty() && vals[maxq.back() % target] <= v) maxq.pop_back();
    maxq.push_back(i);
    while (!minq.empty() && vals[minq.back() % target] >= v) minq.pop_back();
    minq.push_back(i);
    const Eigen::Index lo = i - window;
    while (maxq.front() < lo) maxq.pop_front();
    while (minq.front() < lo) minq.pop_front();
    if (i >= window) {
      worst = std::max(worst, vals[maxq.front() % target] - vals[minq.front() % target]);
    }
  }
  return worst;
}

}  // namespace conjlab
