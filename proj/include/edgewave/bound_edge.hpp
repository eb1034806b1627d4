#pragma once

#include <functional>

#include "edgewave/field_grid.hpp"
#include "edgewave/geometry.hpp"

namespace edgewave {

/// Guided wave along the delta line x = 0 with longitudinal wavenumber k.
/// kappa and lambda solve k + alpha eps = kappa e^lambda and
/// k - alpha eps = kappa e^-lambda for the side eps = sgn(x).
struct WaveguideParams {
  double alpha = 1.0;
  double k = 2.0;
  int eps = 1;
  Cx kappa;
  Cx lambda;
  double E = 0.0;  // k^2 - alpha^2
};

struct KappaLambda {
  Cx kappa;
  Cx lambda;
};

/// kappa = sqrt(k^2 - alpha^2) for k > alpha and i sqrt(alpha^2 - k^2) below;
/// the branch of lambda is picked so that kappa e^lambda = k + alpha eps holds.
/// Throws for alpha <= 0, k <= 0, eps not +-1, or k == alpha.
KappaLambda kappa_lambda(double alpha, double k, int eps);

/// Builds and checks the parameter set (E = kappa^2 and both defining
/// products to 1e-12 relative). Throws NumericalError if a check fails.
WaveguideParams make_waveguide(double alpha, double k, int eps = 1);

/// Largest relative error of kappa^2 = E, kappa e^lambda = k + alpha eps,
/// kappa e^-lambda = k - alpha eps.
double product_defect(const WaveguideParams& w);

/// Closed-form field with the edge tip at the origin:
///   psi = C0 exp(-alpha |x|) (exp(-iky) F(xi) - exp(iky) F(eta*)),
/// F built on kappa, xi from bound_parabolic, eta* per `conjugation`.
struct BoundEdgeField {
  double alpha = 1.0;
  double k = 2.0;
  Cx C0 = 1.0;
  Conjugation conjugation = Conjugation::analytic;
};

/// Evaluates the field with eps = sgn(x) (eps = +1 at x = 0).
Cx bound_edge_field(const BoundEdgeField& f, const PlanePoint& p, Side side = Side::automatic);

/// Same expression with an explicit eps, i.e. the continuation of one
/// half-plane branch across x = 0.
Cx bound_edge_branch(const BoundEdgeField& f, const PlanePoint& p, int eps, Side side = Side::automatic);

/// Samples the field on a grid; the ray and the tip are tagged and set to
/// the upper-face value, and x = 0 is tagged as the delta line.
FieldGrid bound_field_on_grid(const BoundEdgeField& f, const GridSpec& spec, int threads = 0);

/// |[d psi(0+) - d psi(0-)] + 2 alpha psi(0)| / (2 alpha |psi(0)|) at height y
/// from first-order one-sided differences of step h. The right branch
/// supplies psi(0).
double delta_jump_check(const BoundEdgeField& f, double y, double h);

/// Same measure for any pair of half-plane branches of x alone.
double jump_defect(double alpha, const std::function<Cx(double)>& right, const std::function<Cx(double)>& left, double h);

/// |psi(0+, y) - psi(0-, y)| / max(|psi(0+, y)|, |psi(0-, y)|).
double continuity_defect(const BoundEdgeField& f, double y);

struct RayDefect {
  double max_abs = 0.0;  // max |psi| over the ray samples, both faces
  double scale = 0.0;    // max |psi| over a reference square around the tip
  double rel = 0.0;
};

/// Samples x in (0, length] on both faces of the ray.
RayDefect ray_defect(const BoundEdgeField& f, double length, int samples);

struct TailFit {
  double slope = 0.0;  // d ln|psi| / d|x|
  double residual = 0.0;
};

/// Fits ln|psi(x, y)| against |x| for x in [x_far, x_near] (both negative).
TailFit tail_slope(const BoundEdgeField& f, double y, double x_far, double x_near, int samples = 41);

}  // namespace edgewave
