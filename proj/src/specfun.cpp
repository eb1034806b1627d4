#include "edgewave/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "edgewave/quadrature.hpp"

namespace edgewave {

namespace {

constexpr double kTwoOverSqrtPi = 1.12837916709551257390;
constexpr double kSqrtPi = 1.77245385090551602730;
constexpr double kExpLimit = 708.0;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Relative accuracy of faddeeva_w; used for error estimates only.
constexpr double kFaddeevaRel = 2e-14;

using Lcx = std::complex<long double>;

Cx erf_taylor(Cx z) {
  const Lcx zl(z.real(), z.imag());
  const Lcx minus_z2 = -zl * zl;
  Lcx term = zl;  // z (-z^2)^n / n!
  Lcx sum = term;
  const long double r2 = std::norm(zl);
  for (int n = 1; n < 400; ++n) {
    term *= minus_z2 / static_cast<long double>(n);
    const Lcx contrib = term / static_cast<long double>(2 * n + 1);
    sum += contrib;
    if (n > r2 && std::abs(contrib) <= 1e-21L * std::abs(sum)) break;
  }
  sum *= static_cast<long double>(kTwoOverSqrtPi);
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

// erf for Re z >= 0, Im z >= 0.
ErfValue erf_first_quadrant(Cx z) {
  if (std::abs(z) <= erf_taylor_radius) return {erf_taylor(z), false};
  const double re_z2 = z.real() * z.real() - z.imag() * z.imag();
  if (re_z2 > kExpLimit) return {Cx(1.0, 0.0), true};
  if (-re_z2 > kExpLimit) throw std::overflow_error("erf_cx: result exceeds double range");
  return {1.0 - std::exp(-z * z) * faddeeva_w(I * z), false};
}

}  // namespace

Cx faddeeva_w(Cx z) {
  const double xi = z.real(), yi = z.imag();
  const double xabs = std::abs(xi), yabs = std::abs(yi);
  const double xs = xabs / 6.3, ys = yabs / 4.4;
  double qrho = xs * xs + ys * ys;
  double xquad = xabs * xabs - yabs * yabs;
  const double yquad = 2.0 * xabs * yabs;

  double u = 0.0, v = 0.0, u2 = 0.0, v2 = 0.0;
  const bool inner = qrho < 0.085264;
  if (inner) {
    // Taylor series of w about the origin.
    qrho = (1.0 - 0.85 * ys) * std::sqrt(qrho);
    const int n = static_cast<int>(std::lround(6.0 + 72.0 * qrho));
    int j = 2 * n + 1;
    double xsum = 1.0 / j, ysum = 0.0;
    for (int i = n; i >= 1; --i) {
      j -= 2;
      const double xaux = (xsum * xquad - ysum * yquad) / i;
      ysum = (xsum * yquad + ysum * xquad) / i;
      xsum = xaux + 1.0 / j;
    }
    const double u1 = -kTwoOverSqrtPi * (xsum * yabs + ysum * xabs) + 1.0;
    const double v1 = kTwoOverSqrtPi * (xsum * xabs - ysum * yabs);
    const double daux = std::exp(-xquad);
    u2 = daux * std::cos(yquad);
    v2 = -daux * std::sin(yquad);
    u = u1 * u2 - v1 * v2;
    v = u1 * v2 + v1 * u2;
  } else {
    // Laplace continued fraction, with Gautschi's shifted truncation inside
    // the unit ellipse.
    double h = 0.0, h2 = 0.0, qlambda = 0.0;
    int kapn = 0, nu = 0;
    if (qrho > 1.0) {
      qrho = std::sqrt(qrho);
      nu = static_cast<int>(3.0 + 1442.0 / (26.0 + 77.0 * qrho));
    } else {
      qrho = (1.0 - ys) * std::sqrt(1.0 - qrho);
      h = 1.88 * qrho;
      h2 = 2.0 * h;
      kapn = static_cast<int>(std::lround(7.0 + 34.0 * qrho));
      nu = static_cast<int>(std::lround(16.0 + 26.0 * qrho));
    }
    const bool shifted = h > 0.0;
    if (shifted) qlambda = std::pow(h2, kapn);
    double rx = 0.0, ry = 0.0, sx = 0.0, sy = 0.0;
    for (int n = nu; n >= 0; --n) {
      const double np1 = n + 1.0;
      double tx = yabs + h + np1 * rx;
      double ty = xabs - np1 * ry;
      const double c = 0.5 / (tx * tx + ty * ty);
      rx = c * tx;
      ry = c * ty;
      if (shifted && n <= kapn) {
        tx = qlambda + sx;
        sx = rx * tx - ry * sy;
        sy = ry * tx + rx * sy;
        qlambda /= h2;
      }
    }
    if (!shifted) {
      u = kTwoOverSqrtPi * rx;
      v = kTwoOverSqrtPi * ry;
    } else {
      u = kTwoOverSqrtPi * sx;
      v = kTwoOverSqrtPi * sy;
    }
    if (yabs == 0.0) u = std::exp(-xabs * xabs);
  }

  if (yi < 0.0) {
    if (inner) {
      u2 *= 2.0;
      v2 *= 2.0;
    } else {
      xquad = -xquad;
      if (xquad > kExpLimit) throw std::overflow_error("faddeeva_w: result exceeds double range");
      const double w1 = 2.0 * std::exp(xquad);
      u2 = w1 * std::cos(yquad);
      v2 = -w1 * std::sin(yquad);
    }
    u = u2 - u;
    v = v2 - v;
    if (xi > 0.0) v = -v;
  } else if (xi < 0.0) {
    v = -v;
  }
  return {u, v};
}

ErfValue erf_cx_checked(Cx z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw std::domain_error("erf_cx: non-finite argument");
  if (std::abs(z) > 1e6) throw std::domain_error("erf_cx: |z| > 1e6");
  const bool neg_re = std::signbit(z.real());
  const bool neg_im = std::signbit(z.imag());
  ErfValue e = erf_first_quadrant({std::abs(z.real()), std::abs(z.imag())});
  if (neg_re != neg_im) e.value = std::conj(e.value);
  if (neg_re) e.value = -e.value;
  return e;
}

Cx erf_cx(Cx z) { return erf_cx_checked(z).value; }

Cx erfc_cx(Cx z) {
  if (std::abs(z) > 1e6) throw std::domain_error("erfc_cx: |z| > 1e6");
  const double re_z2 = z.real() * z.real() - z.imag() * z.imag();
  if (-re_z2 > kExpLimit) throw std::overflow_error("erfc_cx: result exceeds double range");
  if (re_z2 > kExpLimit) return z.real() >= 0.0 ? Cx(0.0) : Cx(2.0);
  if (z.real() >= 0.0) return std::exp(-z * z) * faddeeva_w(I * z);
  return 2.0 - std::exp(-z * z) * faddeeva_w(-I * z);
}

Cx fresnel_scale(Cx k) {
  if (k == Cx(0.0)) throw std::domain_error("fresnel_F: k == 0, the integral diverges");
  const Cx s = std::sqrt(-2.0 * I * k);
  if (s.real() == 0.0) throw std::domain_error("fresnel_F: Re sqrt(-2ik) == 0, branch is ambiguous");
  return s;
}

FresnelValue fresnel_F(Cx k, Cx xi) {
  const Cx s = fresnel_scale(k);
  const Cx prefactor = kSqrtPi / (2.0 * s);
  const Cx w = -s * xi;
  const Cx w2 = w * w;
  if (-w2.real() > kExpLimit) throw std::overflow_error("fresnel_F: value exceeds double range");

  // erfc(w) = exp(-w^2) w(iw) for Re w >= 0, 2 - exp(-w^2) w(-iw) otherwise.
  Cx tail{};
  if (w2.real() <= kExpLimit) tail = std::exp(-w2) * faddeeva_w(w.real() >= 0.0 ? I * w : -I * w);
  const Cx erfc = w.real() >= 0.0 ? tail : 2.0 - tail;

  FresnelValue out;
  out.value = prefactor * erfc;
  out.est_abs_error =
      std::abs(prefactor) * (std::abs(tail) * (kFaddeevaRel + 4.0 * kEps * std::abs(w2)) + 4.0 * kEps * std::abs(erfc));
  return out;
}

FresnelValue fresnel_F_quadrature(Cx k, Cx xi, double tol) {
  if (!(tol >= 1e-14 && tol <= 1e-4)) throw std::invalid_argument("fresnel_F_quadrature: tol outside [1e-14, 1e-4]");
  const Cx s = fresnel_scale(k);

  // Half line: tau = -v/s maps (-inf, 0] onto v in [0, inf) with integrand exp(-v^2).
  auto gauss = [](double v) { return std::exp(-v * v); };
  const auto half = quad::adaptive<double>(gauss, 0.0, 10.0, 1e-3 * tol);
  const Cx half_line = half.value / s;

  // Segment tau = t xi, t in [0, 1].
  const Cx a = s * xi;
  const Cx a2 = a * a;
  auto segment = [&](double t) { return xi * std::exp(-a2 * t * t); };
  const Cx rough = quad::composite<Cx>(segment, 0.0, 1.0, 64, 16);
  const double scale = std::max({1.0, std::abs(half_line + rough), std::abs(half_line)});
  // exp(-a^2 t^2) carries a relative rounding error of order eps |a|^2, so
  // no rule can beat that fraction of the integral of |integrand|.
  const double rounding = 8.0 * 2.2e-16 * (1.0 + std::abs(a2));
  const double magnitude =
      quad::composite<double>([&](double t) { return std::abs(segment(t)); }, 0.0, 1.0, 64, 16);
  quad::Result<Cx> seg;
  try {
    seg = quad::adaptive<Cx>(segment, 0.0, 1.0, std::max(0.5 * tol * scale, rounding * magnitude), 200000,
                             std::max(rounding, 64 * 2.2e-16));
  } catch (const NumericalError& e) {
    throw NumericalError("fresnel_F_quadrature: no convergence", half_line + e.partial(), e.achieved());
  }

  FresnelValue out;
  out.value = half_line + seg.value;
  out.est_abs_error = half.abs_error / std::abs(s) + seg.abs_error;
  return out;
}

}  // namespace edgewave
