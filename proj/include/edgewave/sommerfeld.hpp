#pragma once

#include <functional>

#include "edgewave/field_grid.hpp"
#include "edgewave/geometry.hpp"

namespace edgewave {

struct EdgeGeometry {
  double a = 0.0;
  BoundaryCondition bc = BoundaryCondition::dirichlet;
};

/// Diffracted field of the half-line edge {y = 0, x >= a}:
///   Dirichlet  C0 [exp(-iky) F(xi) - exp(iky) F(eta)]
///   Neumann    C0 [exp(-iky) F(xi) + exp(iky) F(eta)]
/// with F built on wavenumber k. Throws at the tip or for k <= 0.
Cx edge_field(double k, const EdgeGeometry& geom, const PlanePoint& p, Cx C0 = 1.0, Side side = Side::automatic);

/// d(psi)/dy from the chain rule d(xi)/dy = xi / (2 rho), d(eta)/dy = -eta / (2 rho),
/// rho = xi^2 + eta^2.
Cx edge_field_dy(double k, const EdgeGeometry& geom, const PlanePoint& p, Cx C0 = 1.0, Side side = Side::automatic);

/// Samples edge_field on the grid. Edge nodes get 0 (Dirichlet) or the
/// upper-face value (Neumann); the tip node gets 0 or 2 C0 F(0).
FieldGrid field_on_grid(double k, const EdgeGeometry& geom, const GridSpec& spec, Cx C0 = 1.0, int threads = 0);

/// One-sided fourth-order difference f'(0) from f(0), f(h), ..., f(4h).
Cx one_sided_derivative(const std::function<Cx(double)>& f, double h);

/// Largest |d(psi)/dy| over ray points x in (a, a + length], taken from the
/// upper face by one-sided differences with step min(h, (x - a) / 200),
/// divided by k max|psi|.
double neumann_defect(double k, const EdgeGeometry& geom, double length, int samples, double h, Cx C0 = 1.0);

struct ResidualOptions {
  int edge_band = 2;      // nodes within this many cells of the ray are skipped
  int delta_band = 2;     // same for the x = 0 column, when the grid has one
  double tip_radius = 0;  // nodes closer than this to the tip are skipped
};

struct ResidualReport {
  double max_abs = 0.0;
  double l2 = 0.0;  // sqrt(sum |r|^2 dx dy)
  long nodes = 0;
  bool coarse = false;  // sqrt(|k2|) max(dx, dy) > 0.5
};

/// Five-point residual |(Delta_h + k2) psi| over interior nodes.
ResidualReport helmholtz_residual(const FieldGrid& grid, double k2, const ResidualOptions& opt = {});

}  // namespace edgewave
