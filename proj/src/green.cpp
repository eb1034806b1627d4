#include "edgewave/green.hpp"

#include <algorithm>
#include <cmath>

#include "edgewave/delta_1d.hpp"
#include "edgewave/fit.hpp"
#include "edgewave/quadrature.hpp"

namespace edgewave {

Cx g1(double y, double mu) {
  if (mu == 0.0) throw std::domain_error("g1: mu == 0 is a channel threshold");
  if (mu < 0.0) {
    const double m = std::sqrt(-mu);
    return std::exp(-m * std::abs(y)) / (2.0 * m);
  }
  const double q = std::sqrt(mu);
  return I * std::exp(I * (q * std::abs(y))) / (2.0 * q);
}

Cx green_bound_channel(const ChannelGreen& g, const PlanePoint& from, const PlanePoint& to) {
  const DeltaWell well(g.alpha);
  return bound_mode(well, to.x) * bound_mode(well, from.x) * g1(to.y - from.y, g.E + g.alpha * g.alpha);
}

Cx green_free(double E, double rho) {
  if (!(rho > 0.0)) throw std::domain_error("green_free: coincident points");
  if (E < 0.0) return std::cyl_bessel_k(0.0, std::sqrt(-E) * rho) / (2.0 * pi);
  if (E > 0.0) {
    const double z = std::sqrt(E) * rho;
    return 0.25 * I * Cx(std::cyl_bessel_j(0.0, z), std::cyl_neumann(0.0, z));
  }
  throw std::domain_error("green_free: E == 0");
}

namespace {

struct Correction {
  double alpha, x, xp, dx, dy;

  // Continuum kernel minus its free counterpart cos(p dx) / pi.
  double kernel(double p) const {
    const double d = std::atan2(alpha, p);
    return (std::cos(p * std::abs(x) + d) * std::cos(p * std::abs(xp) + d) + std::sin(p * x) * std::sin(p * xp) -
            std::cos(p * dx)) /
           pi;
  }
};

template <class F>
GreenValue doubled(F&& f, double lo, double hi, const ChannelGreen& g, double scale) {
  int panels = g.start_panels;
  Cx prev = quad::composite<Cx>(f, lo, hi, panels);
  while (panels < g.max_panels) {
    panels *= 2;
    const Cx next = quad::composite<Cx>(f, lo, hi, panels);
    const double diff = std::abs(next - prev);
    if (diff <= g.rel_tol * std::max({std::abs(next), scale, 1e-300})) return {next, diff};
    prev = next;
  }
  throw NumericalError("green_eval: continuum quadrature did not settle", prev);
}

}  // namespace

GreenValue green_eval(const ChannelGreen& g, const PlanePoint& from, const PlanePoint& to) {
  if (!(g.alpha > 0.0)) throw std::invalid_argument("green_eval: alpha must be positive");
  const double rho = std::hypot(to.x - from.x, to.y - from.y);
  if (rho == 0.0) throw std::domain_error("green_eval: coincident points");
  const double P = g.p_max > 0.0 ? g.p_max : 20.0 * g.alpha;
  const Correction c{g.alpha, to.x, from.x, to.x - from.x, std::abs(to.y - from.y)};

  const Cx base = green_bound_channel(g, from, to) + green_free(g.E, rho);
  const double scale = std::abs(base);
  GreenValue out{base, 0.0};
  if (g.E < 0.0) {
    const GreenValue v = doubled([&](double p) { return c.kernel(p) * g1(c.dy, g.E - p * p); }, 0.0, P, g, scale);
    out.value += v.value;
    out.est_abs_error += v.est_abs_error;
    return out;
  }
  // Open continuum: p = sqrt(E) sin(theta) below the threshold and
  // p = sqrt(E) cosh(t) above it remove the inverse square root of g1.
  const double s = std::sqrt(g.E);
  const double theta_max = P >= s ? 0.5 * pi : std::asin(P / s);
  const GreenValue below = doubled(
      [&](double th) {
        const double q = s * std::cos(th);
        return c.kernel(s * std::sin(th)) * 0.5 * I * std::exp(I * (q * c.dy));
      },
      0.0, theta_max, g, scale);
  out.value += below.value;
  out.est_abs_error += below.est_abs_error;
  if (P > s) {
    const GreenValue above = doubled(
        [&](double t) {
          const double m = s * std::sinh(t);
          return Cx(c.kernel(s * std::cosh(t)) * 0.5 * std::exp(-m * c.dy));
        },
        0.0, std::acosh(P / s), g, scale);
    out.value += above.value;
    out.est_abs_error += above.est_abs_error;
  }
  return out;
}

double green_flux_identity(const ChannelGreen& g, const PlanePoint& source, double b, int nodes) {
  if (!(b > 0.0) || std::abs(source.x) <= b) throw std::invalid_argument("green_flux_identity: box must avoid x = 0");
  const quad::Rule& r = quad::gauss_legendre(nodes);
  const double h = 1e-3 * b;
  auto G = [&](double x, double y) { return green_eval(g, source, {x, y, 0.0}).value; };
  Cx flux{}, area{};
  for (int n = 0; n < nodes; ++n) {
    const double t = b * r.nodes[n], w = b * r.weights[n];
    const double xs = source.x, ys = source.y;
    // Outward normal derivatives on the four sides.
    flux += w * (G(xs + b + h, ys + t) - G(xs + b - h, ys + t)) / (2 * h);
    flux += w * (G(xs - b - h, ys + t) - G(xs - b + h, ys + t)) / (2 * h);
    flux += w * (G(xs + t, ys + b + h) - G(xs + t, ys + b - h)) / (2 * h);
    flux += w * (G(xs + t, ys - b - h) - G(xs + t, ys - b + h)) / (2 * h);
    for (int m = 0; m < nodes; ++m) area += w * b * r.weights[m] * G(xs + t, ys + b * r.nodes[m]);
  }
  return std::abs(-flux - g.E * area);
}

Cx born_correction(double alpha, double k, double lambda_imp, double a, const PlanePoint& p, const ChannelGreen* opts) {
  if (!(a > 0.0)) throw std::invalid_argument("born_correction: impurity position a must be positive");
  if (!(k > 0.0)) throw std::invalid_argument("born_correction: k must be positive");
  if (p.x == a && p.y == 0.0) throw std::domain_error("born_correction: probe sits on the impurity");
  ChannelGreen g = opts ? *opts : ChannelGreen{};
  g.alpha = alpha;
  g.E = k * k - alpha * alpha;
  const double psi0_at_impurity = std::exp(-alpha * a);
  return -lambda_imp * green_eval(g, {a, 0.0, a}, p).value * psi0_at_impurity;
}

TailScanResult tail_scan(double alpha, double k, double lambda_imp, const std::vector<double>& a_list,
                         const PlanePoint& probe, const ChannelGreen* opts) {
  if (a_list.size() < 4) throw std::invalid_argument("tail_scan: need at least 4 impurity positions");
  for (std::size_t i = 1; i < a_list.size(); ++i)
    if (!(a_list[i] > a_list[i - 1])) throw std::invalid_argument("tail_scan: positions must increase strictly");
  if (a_list.back() - a_list.front() < 2.0 / alpha - 1e-12)
    throw std::invalid_argument("tail_scan: positions must span at least 2/alpha");
  TailScanResult res;
  res.alpha = alpha;
  res.k = k;
  res.a = a_list;
  std::vector<double> logs;
  for (double a : a_list) {
    const double amp = std::abs(born_correction(alpha, k, lambda_imp, a, probe, opts));
    if (!(amp >= 1e-300)) throw NumericalError("tail_scan: correction amplitude below 1e-300", {}, amp);
    res.amplitude.push_back(amp);
    logs.push_back(std::log(amp));
  }
  const LineFit f = fit_line(res.a, logs);
  res.slope = f.slope;
  res.residual = f.residual;
  return res;
}

}  // namespace edgewave
