#include "edgewave/geometry.hpp"

#include <cmath>

namespace edgewave {

double tip_angle(const PlanePoint& p, Side side) {
  const double dx = p.x - p.a;
  if (dx == 0.0 && p.y == 0.0) throw std::domain_error("parabolic coordinates: point is the edge tip");
  if (p.y == 0.0 && dx > 0.0) {
    switch (side) {
      case Side::top:
        return 0.0;
      case Side::bottom:
        return 2.0 * pi;
      case Side::automatic:
        return std::signbit(p.y) ? 2.0 * pi : 0.0;
      case Side::unspecified:
        throw std::domain_error("parabolic coordinates: point on the edge ray needs a side");
    }
  }
  double phi = std::atan2(p.y, dx);
  if (phi < 0.0) phi += 2.0 * pi;
  return phi;
}

ParabolicCoords to_parabolic(const PlanePoint& p, Side side) {
  ParabolicCoords c;
  c.phi = tip_angle(p, side);
  c.r = std::hypot(p.x - p.a, p.y);
  const double half_chi = 0.5 * (c.phi - 0.5 * pi);
  const double root = std::sqrt(c.r);
  c.xi = root * std::cos(half_chi);
  c.eta = -root * std::sin(half_chi);
  return c;
}

PlanePoint from_parabolic(Cx xi, Cx eta, double a) {
  if (xi.imag() != 0.0 || eta.imag() != 0.0)
    throw std::domain_error("from_parabolic: xi and eta must be real");
  const double u = xi.real(), v = eta.real();
  return {2.0 * u * v + a, u * u - v * v, a};
}

ParabolicCoords bound_parabolic(const PlanePoint& p, Cx lambda, Side side) {
  if (!std::isfinite(lambda.real()) || !std::isfinite(lambda.imag()))
    throw std::domain_error("bound_parabolic: lambda must be finite");
  ParabolicCoords c;
  c.phi = tip_angle(p, side);
  c.r = std::hypot(p.x - p.a, p.y);
  const Cx A = 0.5 * (c.phi - I * lambda);
  const double root = std::sqrt(0.5 * c.r);
  const Cx ca = std::cos(A), sa = std::sin(A);
  c.xi = root * (ca + sa);
  c.eta = root * (ca - sa);
  return c;
}

Cx conjugate_eta(double r, double phi, Cx lambda, Conjugation mode) {
  const double root = std::sqrt(0.5 * r);
  if (mode == Conjugation::literal) {
    const Cx A = 0.5 * (phi - I * lambda);
    return std::conj(root * (std::cos(A) - std::sin(A)));
  }
  const Cx B = 0.5 * (phi + I * lambda);
  return root * (std::cos(B) - std::sin(B));
}

}  // namespace edgewave
