#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "conjlab/errors.hpp"
#include "conjlab/kernels.hpp"
#include "oracles.hpp"

using namespace conjlab;
using oracle::kPi;

TEST_CASE("half_cot values") {
  CHECK(half_cot(kPi) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(half_cot(kPi / 2) == doctest::Approx(0.5).epsilon(1e-14));
  // 1/t - t/12 + O(t^3) near zero
  CHECK(half_cot(0.01) == doctest::Approx(99.9991666652778).epsilon(1e-13));
}

TEST_CASE("half_cot domain") {
  CHECK_THROWS_AS(half_cot(0.0), domain_error);
  CHECK_THROWS_AS(half_cot(-0.1), domain_error);
  CHECK_THROWS_AS(half_cot(kPi + 1e-9), domain_error);
}

TEST_CASE("half_cot series branch matches the direct formula") {
  // Just below the 1e-2 switch the Laurent form must agree with the direct
  // cotangent to far better than the direct form's own cancellation noise.
  const double t = 0.0099;
  CHECK(half_cot(t) == doctest::Approx(101.009276008753369).epsilon(1e-13));
  CHECK(half_cot(t) == doctest::Approx(0.5 / std::tan(0.5 * t)).epsilon(1e-12));
}

TEST_CASE("half_cot regularization: |half_cot(t) - 1/t| <= 1/pi on (0, pi]") {
  // The defect 1/t - half_cot(t) grows monotonically to 1/pi at t = pi.
  double prev = 0.0;
  double worst = 0.0;
  for (int i = 1; i <= 20000; ++i) {
    const double t = kPi * i / 20000.0;
    const double d = 1.0 / t - half_cot(t);
    CHECK(d >= prev - 1e-12);  // monotone increasing
    prev = d;
    worst = std::max(worst, std::abs(d));
  }
  CHECK(worst <= 1.0 / kPi + 1e-12);
  CHECK(worst == doctest::Approx(1.0 / kPi).epsilon(1e-9));
}

TEST_CASE("poisson kernel values") {
  CHECK(poisson_kernel(0.0, 1.234) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(poisson_kernel(0.5, 0.0) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK_THROWS_AS(poisson_kernel(1.0, 0.0), domain_error);
  CHECK_THROWS_AS(poisson_kernel(-0.1, 0.0), domain_error);
}

TEST_CASE("poisson kernel integrates to pi over (-pi, pi]") {
  const double integral = oracle::integrate(
      [](double t) { return poisson_kernel(0.9, t); }, -kPi, kPi, 1e-12);
  CHECK(integral == doctest::Approx(kPi).epsilon(1e-8));
}

TEST_CASE("conjugate poisson kernel") {
  CHECK(conj_poisson_kernel(0.0, 0.7) == 0.0);
  CHECK(conj_poisson_kernel(0.5, 0.0) == 0.0);
  CHECK(std::abs(conj_poisson_kernel(0.5, kPi)) < 1e-15);
  CHECK(conj_poisson_kernel(0.5, kPi / 2) == doctest::Approx(0.4).epsilon(1e-15));
  CHECK_THROWS_AS(conj_poisson_kernel(1.0, 0.1), domain_error);

  // odd in t, exactly
  for (const double r : {0.1, 0.5, 0.9}) {
    for (const double t : {0.3, 1.0, 2.5}) {
      CHECK(conj_poisson_kernel(r, t) + conj_poisson_kernel(r, -t) == 0.0);
    }
  }
}

TEST_CASE("truncated moments: frozen closed-form values") {
  const auto m = truncated_moments(2, 0.5);
  CHECK(m.at(2) == doctest::Approx(0.401709012954110).epsilon(1e-12));

  const auto mp = truncated_moments(4, kPi / 2);
  CHECK(mp.at(1) == doctest::Approx(0.181690113816209).epsilon(1e-12));

  const auto m1 = truncated_moments(1, 1.0);
  CHECK(m1.at(1) == doctest::Approx(0.413841580415046).epsilon(1e-12));
}

TEST_CASE("truncated moments: tau_k(pi) = 0") {
  const auto m = truncated_moments(64, kPi);
  CHECK(m.tau.abs().maxCoeff() < 1e-13);
}

TEST_CASE("truncated moments: tau_k(0+) -> 1") {
  const auto m = truncated_moments(64, 1e-8);
  for (Eigen::Index k = 1; k <= 64; ++k) {
    CHECK(std::abs(m.at(k) - 1.0) < 1e-6);
  }
}

TEST_CASE("truncated moments domain") {
  CHECK_THROWS_AS(truncated_moments(0, 0.5), domain_error);
  CHECK_THROWS_AS(truncated_moments(4, 0.0), domain_error);
  CHECK_THROWS_AS(truncated_moments(4, kPi + 0.1), domain_error);
}

TEST_CASE("recurrence matches the direct closed-form sum") {
  for (const double h : {0.5, 0.1, 0.01, 3.0}) {
    const auto m = truncated_moments(48, h);
    for (int k = 1; k <= 48; ++k) {
      CHECK(m.at(k) == doctest::Approx(oracle::tau_closed_form(k, h)).epsilon(1e-13));
    }
  }
}

TEST_CASE("moment oracle identity against independent quadrature") {
  // (1/pi) integral_h^pi sin(kt) cot(t/2) dt == tau_k(h), checked with the
  // test-side adaptive Simpson rather than the library quadrature.
  for (const int k : {1, 2, 5, 13, 32}) {
    for (const double h : {0.5, 0.1, 0.01}) {
      // integrand sin(kt) cot(t/2); tau_k is the integral divided by pi
      const double integral = oracle::integrate(
          [k](double t) { return std::sin(k * t) * 2.0 * half_cot(t); }, h, kPi,
          1e-12);
      CHECK(std::abs(integral / kPi - oracle::tau_closed_form(k, h)) <= 1e-9);
    }
  }
}

TEST_CASE("tau is continuous in h") {
  const int m = 32;
  const auto a = truncated_moments(m, 0.2);
  const auto b = truncated_moments(m, 0.2 + 1e-9);
  CHECK((a.tau - b.tau).abs().maxCoeff() < 1e-6);
}
