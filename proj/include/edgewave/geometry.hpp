#pragma once

#include "edgewave/types.hpp"

namespace edgewave {

/// Point of the physical plane; the edge occupies {y = 0, x >= a}.
struct PlanePoint {
  double x = 0.0;
  double y = 0.0;
  double a = 0.0;
};

/// Sheet selection on the edge ray, where the angle about the tip is either
/// 0 (upper face) or 2 pi (lower face).
///   top / bottom : explicit face
///   automatic    : face taken from the sign bit of y (+0 top, -0 bottom)
///   unspecified  : a point on the ray is an error
enum class Side { top, bottom, automatic, unspecified };

/// Parabolic double-cover coordinates of a point relative to the edge tip:
/// z = y + i(x - a) = w^2 with w = xi + i eta, so y = xi^2 - eta^2 and
/// x - a = 2 xi eta. `phi` lies in [0, 2 pi] with 0 and 2 pi distinct.
struct ParabolicCoords {
  double r = 0.0;
  double phi = 0.0;
  Cx xi;
  Cx eta;
};

/// Polar angle about the tip in [0, 2 pi]; resolves the edge ray via `side`.
double tip_angle(const PlanePoint& p, Side side);

/// xi = sqrt(r) cos(chi/2), eta = -sqrt(r) sin(chi/2), chi = phi - pi/2.
/// Throws at the tip and, for Side::unspecified, on the edge ray.
ParabolicCoords to_parabolic(const PlanePoint& p, Side side = Side::automatic);

/// Inverse map y = xi^2 - eta^2, x = 2 xi eta + a. Requires real xi, eta.
PlanePoint from_parabolic(Cx xi, Cx eta, double a);

/// Complex-rotated coordinates of the guided (bound) wave:
///   xi  = sqrt(r/2) (cos A + sin A),  eta = sqrt(r/2) (cos A - sin A),
/// with A = (phi - i lambda)/2. At lambda = 0 these coincide with
/// to_parabolic.
ParabolicCoords bound_parabolic(const PlanePoint& p, Cx lambda, Side side = Side::automatic);

/// How the conjugate eta* entering the bound-edge field is formed.
///   analytic : sqrt(r/2)(cos B - sin B), B = (phi + i lambda)/2, i.e. the
///              continuation in lambda of conj(eta) from real lambda
///   literal  : complex conjugate of eta
enum class Conjugation { analytic, literal };

/// eta* for the bound coordinates at the given (r, phi).
Cx conjugate_eta(double r, double phi, Cx lambda, Conjugation mode = Conjugation::analytic);

/// Metric factor 1 / (4 (xi^2 + eta^2)) of the Laplacian in (xi, eta).
template <class Scalar>
Scalar laplacian_factor(Scalar xi, Scalar eta) {
  const Scalar s = xi * xi + eta * eta;
  if (s == Scalar(0)) throw std::domain_error("laplacian_factor: xi^2 + eta^2 == 0 (edge tip)");
  return Scalar(1) / (Scalar(4) * s);
}

}  // namespace edgewave
