#include <doctest.h>

#include "edgewave/sommerfeld.hpp"
#include "edgewave/specfun.hpp"

using namespace edgewave;

TEST_CASE("Dirichlet field vanishes on both faces of the ray") {
  const EdgeGeometry g{0.5, BoundaryCondition::dirichlet};
  for (double k : {0.3, 2.0, 7.0}) {
    double worst = 0.0, scale = 0.0;
    for (int i = 1; i <= 200; ++i) {
      const double x = g.a + 0.05 * i;
      worst = std::max({worst, std::abs(edge_field(k, g, {x, 0.0, g.a}, 1.0, Side::top)),
                        std::abs(edge_field(k, g, {x, 0.0, g.a}, 1.0, Side::bottom))});
      scale = std::max(scale, std::abs(edge_field(k, g, {x, 0.7, g.a})));
    }
    CHECK(worst <= 1e-12 * scale);
  }
}

TEST_CASE("Neumann field has zero normal derivative on the ray") {
  const EdgeGeometry g{0.0, BoundaryCondition::neumann};
  const double k = 1.3;
  for (double x : {0.2, 1.0, 4.0})
    for (Side s : {Side::top, Side::bottom}) CHECK(std::abs(edge_field_dy(k, g, {x, 0.0, 0.0}, 1.0, s)) < 1e-12);
  CHECK(neumann_defect(k, g, 5.0, 50, 1e-3) < 1e-8);
}

TEST_CASE("analytic y derivative matches differences") {
  const double k = 2.0, h = 1e-5;
  for (BoundaryCondition bc : {BoundaryCondition::dirichlet, BoundaryCondition::neumann}) {
    const EdgeGeometry g{0.0, bc};
    for (const PlanePoint& p : {PlanePoint{0.4, 0.9, 0}, PlanePoint{-1.2, -0.3, 0}, PlanePoint{0.8, -1.1, 0}}) {
      const Cx fd = (edge_field(k, g, {p.x, p.y + h, 0}) - edge_field(k, g, {p.x, p.y - h, 0})) / (2 * h);
      CHECK(std::abs(edge_field_dy(k, g, p) - fd) < 1e-7 * std::max(1.0, std::abs(fd)));
    }
  }
}

TEST_CASE("field is continuous across the line behind the tip") {
  const EdgeGeometry g{0.0, BoundaryCondition::dirichlet};
  const Cx above = edge_field(2.0, g, {-1.0, 1e-9, 0}), below = edge_field(2.0, g, {-1.0, -1e-9, 0});
  CHECK(std::abs(above - below) < 1e-7);
}

TEST_CASE("one-sided derivative is exact for quartics") {
  auto f = [](double y) { return Cx(1 + 2 * y - 3 * y * y + y * y * y * y, y); };
  CHECK(std::abs(one_sided_derivative(f, 0.1) - Cx(2, 1)) < 1e-12);
}

TEST_CASE("five-point residual converges at second order") {
  const EdgeGeometry g{0.0, BoundaryCondition::neumann};
  const double k = 1.5;
  ResidualOptions opt;
  opt.tip_radius = 0.5;
  double l2[3];
  const int ns[3] = {61, 121, 241};
  for (int n = 0; n < 3; ++n) l2[n] = helmholtz_residual(field_on_grid(k, g, square_grid(-2, 2, -2, 2, ns[n], ns[n])), k * k, opt).l2;
  CHECK(std::log2(l2[0] / l2[1]) > 1.8);
  CHECK(std::log2(l2[1] / l2[2]) > 1.8);
}

TEST_CASE("grid sampling of the tip and the ray") {
  const double k = 1.0;
  const GridSpec s = square_grid(-1, 1, -1, 1, 21, 21);
  const FieldGrid d = field_on_grid(k, {0.0, BoundaryCondition::dirichlet}, s);
  CHECK(d.values(10, 10) == Cx(0.0));
  CHECK(d.values(15, 10) == Cx(0.0));
  const FieldGrid n = field_on_grid(k, {0.0, BoundaryCondition::neumann}, s);
  CHECK(std::abs(n.values(10, 10) - 2.0 * fresnel_F(k, 0.0).value) < 1e-15);
  CHECK_THROWS(edge_field(0.0, {}, {1, 1, 0}));
  CHECK_THROWS(edge_field(1.0, {}, {0, 0, 0}));
}
