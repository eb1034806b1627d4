#include <doctest.h>

#include <cmath>

#include "edgewave/delta_1d.hpp"
#include "edgewave/fit.hpp"
#include "edgewave/quadrature.hpp"

using namespace edgewave;

TEST_CASE("scattering coefficients conserve flux") {
  for (double alpha : {0.5, 1.0, 2.0}) {
    const DeltaWell w(alpha);
    for (int i = 0; i < 100; ++i) {
      const ScatteringCoefficients c = scattering_coeffs(w, std::pow(10.0, -3.0 + 6.0 * i / 99));
      CHECK(std::abs(std::norm(c.A) + std::norm(c.B) - 1.0) <= 1e-13);
      CHECK(std::abs(c.B - c.A - 1.0) <= 1e-14);  // continuity at x = 0
    }
  }
}

TEST_CASE("pole and residue at i alpha") {
  for (double alpha : {0.5, 1.0, 2.0}) {
    const DeltaWell w(alpha);
    CHECK(std::abs(smatrix_pole(w) - Cx(0, alpha)) <= 1e-12);
    CHECK(std::abs(reflection_residue(w) - Cx(0, alpha)) <= 1e-10);
    CHECK(w.bound_energy() == -alpha * alpha);
  }
}

TEST_CASE("bound state satisfies the jump condition") {
  const DeltaWell w(1.5);
  const double h = 1e-6;
  const double jump = (psi0(w, h) - psi0(w, 0.0)) / h - (psi0(w, 0.0) - psi0(w, -h)) / h;
  CHECK(jump == doctest::Approx(-w.strength() * psi0(w, 0.0)).epsilon(1e-5));
}

TEST_CASE("transverse modes are normalized and orthogonal") {
  const DeltaWell w(1.0);
  const auto norm = quad::adaptive<double>([&](double x) { return std::pow(bound_mode(w, x), 2); }, -40, 40, 1e-13);
  CHECK(norm.value == doctest::Approx(1.0).epsilon(1e-12));
  const auto overlap =
      quad::adaptive<double>([&](double x) { return bound_mode(w, x) * even_mode(w, 0.8, x); }, -40, 40, 1e-13);
  CHECK(std::abs(overlap.value) < 1e-12);
  // even mode obeys the same jump condition
  const double h = 1e-6, p = 0.8;
  const double jump = 2.0 * (even_mode(w, p, h) - even_mode(w, p, 0.0)) / h;
  CHECK(jump == doctest::Approx(-w.strength() * even_mode(w, p, 0.0)).epsilon(1e-4));
  CHECK(odd_mode(p, 0.0) == 0.0);
}

TEST_CASE("delta well argument errors") {
  CHECK_THROWS_AS(DeltaWell(0.0), std::invalid_argument);
  CHECK_THROWS_AS(scattering_coeffs(DeltaWell(1.0), 0.0), std::invalid_argument);
}

TEST_CASE("line fit") {
  const LineFit f = fit_line({0, 1, 2, 3}, {1, 3, 5, 7});
  CHECK(f.slope == doctest::Approx(2.0));
  CHECK(f.intercept == doctest::Approx(1.0));
  CHECK(f.residual < 1e-14);
  CHECK_THROWS(fit_line({1, 1}, {2, 3}));
}
