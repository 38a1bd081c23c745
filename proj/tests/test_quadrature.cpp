#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "conjlab/errors.hpp"
#include "conjlab/quadrature.hpp"
#include "oracles.hpp"

using namespace conjlab;
using oracle::kPi;

TEST_CASE("polynomials are integrated exactly") {
  // Gauss-Legendre of order 16 is exact through degree 31 on a single panel.
  const auto r = integrate_graded(
      [](double t) { return 3.0 * t * t; }, 1.0, 2.0, {});
  CHECK(r.value == doctest::Approx(7.0).epsilon(1e-14));

  const auto r2 = integrate_graded(
      [](double t) { return std::pow(t, 15.0); }, 0.5, 4.0, {});
  CHECK(r2.value == doctest::Approx((std::pow(4.0, 16.0) - std::pow(0.5, 16.0)) / 16.0)
                        .epsilon(1e-13));
}

TEST_CASE("smooth transcendental integrands") {
  const auto r = integrate_graded([](double t) { return std::sin(t); }, 0.5,
                                  kPi, QuadratureOptions{1e-12, 20000});
  CHECK(r.value == doctest::Approx(std::cos(0.5) + 1.0).epsilon(1e-12));

  // 1/t over [a, pi]: the graded panels were made for this shape.
  for (const double a : {0.3, 1e-3, 1e-6}) {
    const auto inv = integrate_graded([](double t) { return 1.0 / t; }, a, kPi,
                                      QuadratureOptions{1e-12, 20000});
    CHECK(inv.value == doctest::Approx(std::log(kPi / a)).epsilon(1e-11));
  }
}

TEST_CASE("agrees with the Simpson oracle on an oscillatory integrand") {
  const auto f = [](double t) { return std::sin(17.0 * t) / t; };
  const auto gl = integrate_graded(f, 0.01, kPi, QuadratureOptions{1e-12, 20000});
  const double simpson = oracle::integrate(f, 0.01, kPi, 1e-13);
  CHECK(gl.value == doctest::Approx(simpson).epsilon(1e-10));
}

TEST_CASE("domain checks") {
  const auto one = [](double) { return 1.0; };
  CHECK_THROWS_AS(integrate_graded(one, 0.0, 1.0, {}), domain_error);
  CHECK_THROWS_AS(integrate_graded(one, 2.0, 1.0, {}), domain_error);
  CHECK_THROWS_AS(integrate_graded(one, 1.0, 2.0, QuadratureOptions{1e-3, 100}),
                  domain_error);
  CHECK_THROWS_AS(integrate_graded(one, 1.0, 2.0, QuadratureOptions{1e-14, 100}),
                  domain_error);
}

TEST_CASE("panel budget exhaustion carries the best estimate") {
  // Budget smaller than the base panel count: must fail, and the carried
  // estimate should still be in the right ballpark.
  const auto f = [](double t) { return 1.0 / t; };
  try {
    integrate_graded(f, 1e-4, kPi, QuadratureOptions{1e-10, 4});
    FAIL("expected convergence_error");
  } catch (const convergence_error& e) {
    CHECK(std::isfinite(e.best_estimate()));
  }

  // A budget that only covers the base pass but no refinement.
  try {
    const auto ok = integrate_graded(f, 1e-4, kPi, QuadratureOptions{1e-12, 20000});
    const int base_panels = 16;  // ceil(log2(pi / 1e-4)) + 1
    try {
      integrate_graded(f, 1e-4, kPi, QuadratureOptions{1e-12, base_panels + 2});
      // Acceptable: converged within the tiny budget.
    } catch (const convergence_error& e) {
      CHECK(e.best_estimate() ==
            doctest::Approx(ok.value).epsilon(1e-4));
    }
  } catch (const convergence_error&) {
    FAIL("full-budget run must converge");
  }
}

TEST_CASE("reported error estimate bounds the true error") {
  const auto f = [](double t) { return std::cos(9.0 * t) / (t * t); };
  const auto r = integrate_graded(f, 0.05, kPi, QuadratureOptions{1e-11, 20000});
  const double truth = oracle::integrate(f, 0.05, kPi, 1e-13);
  CHECK(std::abs(r.value - truth) <= std::max(r.error_estimate, 1e-9));
}
