#include "edgewave/sommerfeld.hpp"

#include <algorithm>
#include <cmath>

#include "edgewave/specfun.hpp"

namespace edgewave {

namespace {

void check_k(double k) {
  if (!(k > 0.0) || !std::isfinite(k)) throw std::invalid_argument("edge field: k must be positive");
}

double bc_sign(BoundaryCondition bc) { return bc == BoundaryCondition::dirichlet ? -1.0 : 1.0; }

}  // namespace

Cx edge_field(double k, const EdgeGeometry& geom, const PlanePoint& p, Cx C0, Side side) {
  check_k(k);
  const ParabolicCoords c = to_parabolic({p.x, p.y, geom.a}, side);
  const Cx up = std::exp(-I * (k * p.y)) * fresnel_F(k, c.xi).value;
  const Cx down = std::exp(I * (k * p.y)) * fresnel_F(k, c.eta).value;
  return C0 * (up + bc_sign(geom.bc) * down);
}

Cx edge_field_dy(double k, const EdgeGeometry& geom, const PlanePoint& p, Cx C0, Side side) {
  check_k(k);
  const ParabolicCoords c = to_parabolic({p.x, p.y, geom.a}, side);
  const Cx rho2 = 2.0 * (c.xi * c.xi + c.eta * c.eta);
  const Cx eu = std::exp(-I * (k * p.y)), ed = std::exp(I * (k * p.y));
  const Cx dF_xi = std::exp(2.0 * I * k * c.xi * c.xi);
  const Cx dF_eta = std::exp(2.0 * I * k * c.eta * c.eta);
  const Cx up = eu * (-I * k * fresnel_F(k, c.xi).value + dF_xi * c.xi / rho2);
  const Cx down = ed * (I * k * fresnel_F(k, c.eta).value - dF_eta * c.eta / rho2);
  return C0 * (up + bc_sign(geom.bc) * down);
}

FieldGrid field_on_grid(double k, const EdgeGeometry& geom, const GridSpec& spec, Cx C0, int threads) {
  check_k(k);
  FieldGrid grid = make_field_grid(spec, true, geom.a, false);
  const bool dirichlet = geom.bc == BoundaryCondition::dirichlet;
  const Cx tip_value = dirichlet ? Cx{} : 2.0 * C0 * fresnel_F(k, 0.0).value;
  fill_grid(
      grid,
      [&](double x, double y, int i, int j) -> Cx {
        if (grid.tag(i, j) != NodeTag::edge) return edge_field(k, geom, {x, y, geom.a}, C0, Side::automatic);
        if (dirichlet) return 0.0;
        if (x == geom.a) return tip_value;
        return edge_field(k, geom, {x, 0.0, geom.a}, C0, Side::top);
      },
      threads);
  return grid;
}

Cx one_sided_derivative(const std::function<Cx(double)>& f, double h) {
  return (-25.0 * f(0.0) + 48.0 * f(h) - 36.0 * f(2 * h) + 16.0 * f(3 * h) - 3.0 * f(4 * h)) / (12.0 * h);
}

double neumann_defect(double k, const EdgeGeometry& geom, double length, int samples, double h, Cx C0) {
  if (samples < 1 || !(length > 0.0) || !(h > 0.0)) throw std::invalid_argument("neumann_defect: bad sampling");
  double worst = 0.0, scale = 0.0;
  for (int n = 1; n <= samples; ++n) {
    const double x = geom.a + length * n / samples;
    auto f = [&](double y) { return edge_field(k, geom, {x, y, geom.a}, C0, Side::top); };
    // The field varies on the scale x - a near the tip.
    worst = std::max(worst, std::abs(one_sided_derivative(f, std::min(h, 0.005 * (x - geom.a)))));
    scale = std::max(scale, std::abs(f(0.0)));
  }
  return worst / (k * scale);
}

ResidualReport helmholtz_residual(const FieldGrid& grid, double k2, const ResidualOptions& opt) {
  const GridSpec& s = grid.spec;
  const double tip_x = grid.tip_col >= 0 ? s.x(grid.tip_col) : 0.0;
  const double idx2 = 1.0 / (s.dx * s.dx), idy2 = 1.0 / (s.dy * s.dy);
  ResidualReport rep;
  rep.coarse = std::sqrt(std::abs(k2)) * std::max(s.dx, s.dy) > 0.5;
  double sum2 = 0.0;
  for (int j = 1; j < s.ny - 1; ++j) {
    for (int i = 1; i < s.nx - 1; ++i) {
      if (grid.ray_row >= 0 && grid.tip_col >= 0) {
        const int di = std::max(0, grid.tip_col - i), dj = std::abs(j - grid.ray_row);
        if (std::max(di, dj) <= opt.edge_band) continue;
        if (opt.tip_radius > 0.0 && std::hypot(s.x(i) - tip_x, s.y(j)) < opt.tip_radius) continue;
      }
      if (grid.delta_col >= 0 && std::abs(i - grid.delta_col) <= opt.delta_band) continue;
      const Cx c = grid.values(i, j);
      const Cx lap = (grid.values(i + 1, j) - 2.0 * c + grid.values(i - 1, j)) * idx2 +
                     (grid.values(i, j + 1) - 2.0 * c + grid.values(i, j - 1)) * idy2;
      const double r = std::abs(lap + k2 * c);
      rep.max_abs = std::max(rep.max_abs, r);
      sum2 += r * r;
      ++rep.nodes;
    }
  }
  rep.l2 = std::sqrt(sum2 * s.dx * s.dy);
  return rep;
}

}  // namespace edgewave
