#include "edgewave/bound_edge.hpp"

#include <algorithm>
#include <cmath>

#include "edgewave/fit.hpp"
#include "edgewave/specfun.hpp"

namespace edgewave {

KappaLambda kappa_lambda(double alpha, double k, int eps) {
  if (!(alpha > 0.0) || !(k > 0.0)) throw std::invalid_argument("kappa_lambda: alpha and k must be positive");
  if (eps != 1 && eps != -1) throw std::invalid_argument("kappa_lambda: eps must be +1 or -1");
  if (k == alpha) throw std::domain_error("kappa_lambda: k == alpha is the branch point (kappa = 0)");
  KappaLambda out;
  out.kappa = k > alpha ? Cx(std::sqrt((k - alpha) * (k + alpha)), 0.0) : Cx(0.0, std::sqrt((alpha - k) * (alpha + k)));
  const double plus = k + alpha * eps, minus = k - alpha * eps;
  Cx lambda = 0.5 * std::log(Cx(plus / minus, 0.0));
  // e^lambda is fixed only up to sign by the ratio.
  if (std::abs(out.kappa * std::exp(lambda) - plus) > 1e-9 * std::abs(plus)) lambda += I * pi;
  if (lambda.imag() > pi) lambda -= 2.0 * pi * I;
  out.lambda = lambda;
  return out;
}

double product_defect(const WaveguideParams& w) {
  const double plus = w.k + w.alpha * w.eps, minus = w.k - w.alpha * w.eps;
  const double e1 = std::abs(w.kappa * w.kappa - w.E) / std::max(1.0, std::abs(w.E));
  const double e2 = std::abs(w.kappa * std::exp(w.lambda) - plus) / std::abs(plus);
  const double e3 = std::abs(w.kappa * std::exp(-w.lambda) - minus) / std::abs(minus);
  return std::max({e1, e2, e3});
}

WaveguideParams make_waveguide(double alpha, double k, int eps) {
  const KappaLambda kl = kappa_lambda(alpha, k, eps);
  WaveguideParams w{alpha, k, eps, kl.kappa, kl.lambda, k * k - alpha * alpha};
  const double d = product_defect(w);
  if (!(d <= 1e-12)) throw NumericalError("make_waveguide: defining products violated", {}, d);
  return w;
}

Cx bound_edge_branch(const BoundEdgeField& f, const PlanePoint& p, int eps, Side side) {
  const WaveguideParams w = make_waveguide(f.alpha, f.k, eps);
  const PlanePoint q{p.x, p.y, 0.0};
  const ParabolicCoords c = bound_parabolic(q, w.lambda, side);
  const Cx eta_star = conjugate_eta(c.r, c.phi, w.lambda, f.conjugation);
  const Cx up = std::exp(-I * (f.k * p.y)) * fresnel_F(w.kappa, c.xi).value;
  const Cx down = std::exp(I * (f.k * p.y)) * fresnel_F(w.kappa, eta_star).value;
  return f.C0 * std::exp(-f.alpha * std::abs(p.x)) * (up - down);
}

Cx bound_edge_field(const BoundEdgeField& f, const PlanePoint& p, Side side) {
  return bound_edge_branch(f, p, p.x < 0.0 ? -1 : 1, side);
}

FieldGrid bound_field_on_grid(const BoundEdgeField& f, const GridSpec& spec, int threads) {
  FieldGrid grid = make_field_grid(spec, true, 0.0, true);
  fill_grid(
      grid,
      [&](double x, double y, int i, int j) -> Cx {
        if (grid.tag(i, j) != NodeTag::edge) return bound_edge_field(f, {x, y, 0.0});
        if (x == 0.0) return 0.0;
        return bound_edge_field(f, {x, 0.0, 0.0}, Side::top);
      },
      threads);
  return grid;
}

double jump_defect(double alpha, const std::function<Cx(double)>& right, const std::function<Cx(double)>& left,
                   double h) {
  const Cx psi = right(0.0);
  const Cx d_right = (right(h) - psi) / h;
  const Cx d_left = (left(0.0) - left(-h)) / h;
  return std::abs(d_right - d_left + 2.0 * alpha * psi) / (2.0 * alpha * std::abs(psi));
}

double delta_jump_check(const BoundEdgeField& f, double y, double h) {
  if (y == 0.0) throw std::domain_error("delta_jump_check: y must be nonzero");
  if (!(h > 0.0)) throw std::invalid_argument("delta_jump_check: h must be positive");
  return jump_defect(
      f.alpha, [&](double x) { return bound_edge_branch(f, {x, y, 0.0}, 1); },
      [&](double x) { return bound_edge_branch(f, {x, y, 0.0}, -1); }, h);
}

double continuity_defect(const BoundEdgeField& f, double y) {
  if (y == 0.0) throw std::domain_error("continuity_defect: y must be nonzero");
  const Cx r = bound_edge_branch(f, {0.0, y, 0.0}, 1);
  const Cx l = bound_edge_branch(f, {0.0, y, 0.0}, -1);
  return std::abs(r - l) / std::max(std::abs(r), std::abs(l));
}

RayDefect ray_defect(const BoundEdgeField& f, double length, int samples) {
  if (samples < 1 || !(length > 0.0)) throw std::invalid_argument("ray_defect: bad sampling");
  RayDefect d;
  for (int n = 1; n <= samples; ++n) {
    const double x = length * n / samples;
    d.max_abs = std::max(d.max_abs, std::abs(bound_edge_field(f, {x, 0.0, 0.0}, Side::top)));
    d.max_abs = std::max(d.max_abs, std::abs(bound_edge_field(f, {x, 0.0, 0.0}, Side::bottom)));
  }
  const int m = 41;
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i) {
      const double x = -length + 2.0 * length * i / (m - 1), y = -length + 2.0 * length * j / (m - 1);
      if (j == (m - 1) / 2) continue;  // ray row and tip
      d.scale = std::max(d.scale, std::abs(bound_edge_field(f, {x, y, 0.0})));
    }
  d.rel = d.scale > 0.0 ? d.max_abs / d.scale : d.max_abs;
  return d;
}

TailFit tail_slope(const BoundEdgeField& f, double y, double x_far, double x_near, int samples) {
  if (!(x_far < x_near) || !(x_near < 0.0) || samples < 3)
    throw std::invalid_argument("tail_slope: need x_far < x_near < 0 and >= 3 samples");
  std::vector<double> s, v;
  for (int n = 0; n < samples; ++n) {
    const double x = x_far + (x_near - x_far) * n / (samples - 1);
    const double m = std::abs(bound_edge_field(f, {x, y, 0.0}));
    if (!(m > 0.0)) throw NumericalError("tail_slope: field vanished in the fit window");
    s.push_back(-x);
    v.push_back(std::log(m));
  }
  const LineFit lf = fit_line(s, v);
  return {lf.slope, lf.residual};
}

}  // namespace edgewave
