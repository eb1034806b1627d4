#include <doctest.h>

#include <random>

#include "edgewave/geometry.hpp"

using namespace edgewave;

TEST_CASE("parabolic map relations and round trip") {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> u(-5, 5), ua(0, 2);
  for (int i = 0; i < 500; ++i) {
    const PlanePoint p{u(gen), u(gen), ua(gen)};
    const ParabolicCoords c = to_parabolic(p);
    CHECK(std::abs(c.xi * c.xi - c.eta * c.eta - p.y) < 1e-12 * std::max(1.0, c.r));
    CHECK(std::abs(2.0 * c.xi * c.eta - (p.x - p.a)) < 1e-12 * std::max(1.0, c.r));
    CHECK(c.phi >= 0.0);
    CHECK(c.phi <= 2 * pi);
    const PlanePoint q = from_parabolic(c.xi, c.eta, p.a);
    CHECK(std::hypot(q.x - p.x, q.y - p.y) < 1e-12 * std::max(1.0, c.r));
  }
}

TEST_CASE("the two faces of the ray are distinct sheets") {
  const PlanePoint p{2.0, 0.0, 0.5};
  CHECK(tip_angle(p, Side::top) == 0.0);
  CHECK(tip_angle(p, Side::bottom) == doctest::Approx(2 * pi));
  CHECK(tip_angle({2.0, -0.0, 0.5}, Side::automatic) == doctest::Approx(2 * pi));
  const ParabolicCoords t = to_parabolic(p, Side::top), b = to_parabolic(p, Side::bottom);
  CHECK(std::abs(t.xi + b.xi) < 1e-15);  // w -> -w
  CHECK_THROWS_AS(to_parabolic(p, Side::unspecified), std::domain_error);
  CHECK_THROWS_AS(to_parabolic({0.5, 0.0, 0.5}), std::domain_error);
  // left of the tip the face does not matter
  CHECK(tip_angle({-1.0, 0.0, 0.0}, Side::unspecified) == doctest::Approx(pi));
}

TEST_CASE("bound coordinates reduce to the free ones and conjugate on the ray") {
  const PlanePoint p{0.3, -0.8, 0.0};
  const ParabolicCoords a = to_parabolic(p), b = bound_parabolic(p, 0.0);
  CHECK(std::abs(a.xi - b.xi) < 1e-14);
  CHECK(std::abs(a.eta - b.eta) < 1e-14);
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> ur(0.01, 10), ul(-3, 3);
  for (int i = 0; i < 100; ++i) {
    const double r = ur(gen), lam = ul(gen);
    for (Side s : {Side::top, Side::bottom}) {
      const ParabolicCoords c = bound_parabolic({r, 0.0, 0.0}, lam, s);
      CHECK(std::abs(c.xi - std::conj(c.eta)) <= 1e-12 * std::sqrt(r));
      CHECK(std::abs(conjugate_eta(c.r, c.phi, lam) - std::conj(c.eta)) <= 1e-12 * std::sqrt(r));
    }
  }
}

TEST_CASE("analytic eta* differs from the plain conjugate for complex lambda") {
  const Cx lam(0.3, pi / 2);
  const ParabolicCoords c = bound_parabolic({1.0, 0.7, 0.0}, lam);
  const Cx analytic = conjugate_eta(c.r, c.phi, lam, Conjugation::analytic);
  const Cx literal = conjugate_eta(c.r, c.phi, lam, Conjugation::literal);
  CHECK(std::abs(literal - std::conj(c.eta)) < 1e-15);
  CHECK(std::abs(analytic - literal) > 1e-3);
  CHECK_THROWS(laplacian_factor(Cx(0.0), Cx(0.0)));
  CHECK(laplacian_factor(1.0, 0.0) == 0.25);
}
