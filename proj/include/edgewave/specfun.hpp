#pragma once

#include "edgewave/types.hpp"

namespace edgewave {

/// erf of complex argument together with a saturation flag. The flag is set
/// when exp(-z^2) underflows and the result is the limit +-1.
struct ErfValue {
  Cx value;
  bool saturated = false;
};

/// Value of the Fresnel-type integral F with an estimate of its absolute error.
struct FresnelValue {
  Cx value;
  double est_abs_error = 0.0;
};

/// Faddeeva function w(z) = exp(-z^2) erfc(-iz) (Poppe-Wijers algorithm).
Cx faddeeva_w(Cx z);

/// Error function of complex argument.
///
/// Taylor series (long double accumulation) for |z| <= erf_taylor_radius,
/// continued-fraction based Faddeeva evaluation outside. Odd and conjugation
/// symmetry hold exactly because every argument is first folded into the
/// first quadrant. Throws std::domain_error for |z| > 1e6 and
/// std::overflow_error when the result exceeds the double range.
ErfValue erf_cx_checked(Cx z);
Cx erf_cx(Cx z);

/// erfc(z) = 1 - erf(z), evaluated without cancellation where erfc is small.
Cx erfc_cx(Cx z);

inline constexpr double erf_taylor_radius = 3.0;

/// F(xi) = integral from -infinity to xi of exp(2 i k tau^2).
///
/// The lower limit is taken along the valley of the integrand, so for complex
/// k the integral is defined by contour rotation. Computed as
/// sqrt(pi)/(2s) * erfc(-s xi) with s = sqrt(-2ik), Re s > 0.
/// Errors: k == 0, or Re s == 0 (k on the negative imaginary axis).
FresnelValue fresnel_F(Cx k, Cx xi);
inline FresnelValue fresnel_F(double k, Cx xi) { return fresnel_F(Cx(k, 0.0), xi); }

/// Independent evaluation of F by adaptive Gauss-Legendre quadrature: the
/// half-line piece along the rotated ray tau = -v/s, the finite piece along
/// the segment from 0 to xi. `tol` in [1e-14, 1e-4] is relative to max(1, |F|).
FresnelValue fresnel_F_quadrature(Cx k, Cx xi, double tol);

/// Branch s = sqrt(-2ik) used by both F evaluators.
Cx fresnel_scale(Cx k);

}  // namespace edgewave
