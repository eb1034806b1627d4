#pragma once

#include "edgewave/types.hpp"

namespace edgewave {

/// Attractive delta well H1 = -d^2/dx^2 - g delta(x). `alpha` is the decay
/// rate of the single bound state; the strength is fixed at g = 2 alpha so
/// that the bound state is exp(-alpha |x|) with energy -alpha^2.
class DeltaWell {
 public:
  explicit DeltaWell(double alpha);

  double alpha() const { return alpha_; }
  double strength() const { return 2.0 * alpha_; }
  double bound_energy() const { return -alpha_ * alpha_; }

 private:
  double alpha_;
};

struct ScatteringCoefficients {
  double p = 0.0;
  Cx A;  // coefficient of exp(-ipx)
  Cx B;  // coefficient of exp(+ipx)
};

/// Unnormalized bound state exp(-alpha |x|).
double psi0(const DeltaWell& well, double x);

/// A = i alpha / (p - i alpha), B = p / (p - i alpha). Requires p > 0.
ScatteringCoefficients scattering_coeffs(const DeltaWell& well, double p);

/// Pole of A and B in the complex momentum plane, located by Newton
/// iteration on the denominator p - i alpha.
Cx smatrix_pole(const DeltaWell& well);

/// Residue of A at its pole, by the trapezoidal rule on a circle about the
/// pole (spectrally accurate for a simple pole).
Cx reflection_residue(const DeltaWell& well, int nodes = 64);

// Orthonormal transverse eigenbasis of H1, used by the channel Green's
// function: bound state sqrt(alpha) exp(-alpha |x|) and the even/odd
// continuum normalized to delta(p - p') on p > 0.

double bound_mode(const DeltaWell& well, double x);

/// Even-channel phase shift: tan(delta_p) = alpha / p.
double even_phase(const DeltaWell& well, double p);

/// cos(p|x| + delta_p) / sqrt(pi).
double even_mode(const DeltaWell& well, double p, double x);

/// sin(p x) / sqrt(pi).
double odd_mode(double p, double x);

}  // namespace edgewave
