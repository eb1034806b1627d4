#include <doctest.h>

#include "edgewave/bound_edge.hpp"
#include "edgewave/sommerfeld.hpp"

using namespace edgewave;

TEST_CASE("kappa and lambda for real and imaginary kappa") {
  for (double alpha : {0.5, 1.0, 2.0})
    for (double k : {0.3 * alpha, 0.5 * alpha, 1.7 * alpha, 4.0 * alpha})
      for (int eps : {1, -1}) {
        const WaveguideParams w = make_waveguide(alpha, k, eps);
        CHECK(product_defect(w) <= 1e-12);
        if (k > alpha) {
          CHECK(w.kappa.imag() == 0.0);
          CHECK(w.kappa.real() > 0.0);
        } else {
          CHECK(w.kappa.real() == 0.0);
          CHECK(w.kappa.imag() > 0.0);
        }
        CHECK(std::abs(kappa_lambda(alpha, k, -eps).lambda + w.lambda) < 1e-14);
      }
  CHECK_THROWS(kappa_lambda(1.0, 1.0, 1));
  CHECK_THROWS(kappa_lambda(1.0, 0.5, 0));
}

TEST_CASE("bound-edge field vanishes on the ray with analytic eta*") {
  for (double k : {0.5, 2.0}) {
    const RayDefect r = ray_defect({1.0, k}, 10.0, 500);
    CHECK(r.rel < 1e-13);
  }
  // the plain conjugate breaks the cancellation in the trapped regime
  const RayDefect lit = ray_defect({1.0, 0.5, 1.0, Conjugation::literal}, 10.0, 500);
  CHECK(lit.rel > 1e-2);
}

TEST_CASE("bound-edge field tends to the free edge field as alpha goes to 0") {
  const double k = 1.4;
  for (const PlanePoint& p : {PlanePoint{0.7, 1.3, 0}, PlanePoint{-1.1, 0.4, 0}}) {
    const Cx b = bound_edge_field({1e-7, k}, p);
    const Cx s = edge_field(k, {0.0, BoundaryCondition::dirichlet}, p);
    CHECK(std::abs(b - s) < 1e-5 * std::abs(s));
  }
}

TEST_CASE("bound-edge residual away from the ray and the delta line") {
  const BoundEdgeField f{1.0, 2.0};
  ResidualOptions opt;
  opt.tip_radius = 0.5;
  double l2[2];
  const int ns[2] = {81, 161};
  for (int n = 0; n < 2; ++n)
    l2[n] = helmholtz_residual(bound_field_on_grid(f, square_grid(-2, 2, -2, 2, ns[n], ns[n])), f.k * f.k - 1.0, opt).l2;
  CHECK(std::log2(l2[0] / l2[1]) > 1.8);
}

TEST_CASE("jump diagnostics") {
  // a true bound state passes the jump check
  auto b = [](double x) { return Cx(std::exp(-std::abs(x))); };
  CHECK(jump_defect(1.0, b, b, 1e-5) < 1e-4);
  const BoundEdgeField f{1.0, 0.5};
  CHECK(std::isfinite(delta_jump_check(f, -3.0, 1e-4)));
  CHECK(continuity_defect(f, -3.0) >= 0.0);
  CHECK_THROWS(delta_jump_check(f, 0.0, 1e-4));
  CHECK_THROWS(tail_slope(f, 1.0, -5.0, -10.0));
  const FieldGrid g = bound_field_on_grid(f, square_grid(-1, 1, -1, 1, 21, 21));
  CHECK(g.delta_col == 10);
  CHECK(g.tip_col == 10);
}
