#pragma once

#include <vector>

#include "edgewave/geometry.hpp"

namespace edgewave {

/// Resolvent of H = -Delta - 2 alpha delta(x), i.e. (H - E) G = delta, built
/// from the transverse eigenbasis of the delta well: one bound channel plus
/// the even/odd continuum, each propagating along y with the outgoing 1D
/// resolvent g1. The continuum is integrated as the free resolvent plus a
/// correction integral truncated at p_max.
struct ChannelGreen {
  double alpha = 1.0;
  double E = -0.75;
  double p_max = 0.0;  // 0 selects 20 alpha
  double rel_tol = 1e-8;
  int start_panels = 8;
  int max_panels = 4096;
};

struct GreenValue {
  Cx value;
  double est_abs_error = 0.0;
};

/// Outgoing 1D resolvent (-d^2/dy^2 - mu) g = delta:
///   mu < 0 : exp(-m |y|) / (2 m),  m = sqrt(-mu)
///   mu > 0 : i exp(i q |y|) / (2 q), q = sqrt(mu)
/// Throws at mu == 0.
Cx g1(double y, double mu);

/// Bound-channel term alpha exp(-alpha |x|) exp(-alpha |x'|) g1(y - y'; E + alpha^2).
Cx green_bound_channel(const ChannelGreen& g, const PlanePoint& from, const PlanePoint& to);

/// Free resolvent of -Delta - E at distance rho > 0.
Cx green_free(double E, double rho);

/// Full G(to, from). Throws std::domain_error at coincident points and
/// NumericalError when panel doubling does not settle.
GreenValue green_eval(const ChannelGreen& g, const PlanePoint& from, const PlanePoint& to);

/// -(integral of dG/dn over a square of half-width b around the source)
/// - E (integral of G over the square), in modulus; 1 for an exact resolvent.
/// The square must not meet x = 0.
double green_flux_identity(const ChannelGreen& g, const PlanePoint& source, double b, int nodes = 24);

/// First-order change of the guided state exp(-alpha |x|) exp(iky) caused by
/// the impurity lambda_imp delta(x - a) delta(y):
///   psi1(p) = -lambda_imp G(p; (a, 0)) exp(-alpha a),  E = k^2 - alpha^2.
Cx born_correction(double alpha, double k, double lambda_imp, double a, const PlanePoint& p, const ChannelGreen* opts = nullptr);

struct TailScanResult {
  std::vector<double> a;
  std::vector<double> amplitude;
  double slope = 0.0;
  double residual = 0.0;
  double alpha = 0.0;
  double k = 0.0;
};

/// |psi1(probe)| for every impurity position and the least-squares slope of
/// its logarithm against a. Requires >= 4 strictly increasing positions
/// spanning >= 2 / alpha.
TailScanResult tail_scan(double alpha, double k, double lambda_imp, const std::vector<double>& a_list,
                         const PlanePoint& probe, const ChannelGreen* opts = nullptr);

}  // namespace edgewave
