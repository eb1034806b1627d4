#include <doctest.h>

#include <random>

#include "edgewave/specfun.hpp"

using namespace edgewave;

namespace {

// Maclaurin series of erf summed in long double, valid for moderate |z|.
Cx erf_series(Cx z) {
  using L = std::complex<long double>;
  const L zz(z.real(), z.imag()), z2 = zz * zz;
  L term = zz, sum = zz;
  for (int n = 1; n < 400; ++n) {
    term *= -z2 / static_cast<long double>(n);
    const L add = term / static_cast<long double>(2 * n + 1);
    sum += add;
    if (std::abs(add) < 1e-22L * std::abs(sum)) break;
  }
  const L r = sum * (2.0L / std::sqrt(std::numbers::pi_v<long double>));
  return {static_cast<double>(r.real()), static_cast<double>(r.imag())};
}

double rel(Cx a, Cx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("erf matches high-precision reference values") {
  struct Ref {
    Cx z, v;
  };
  const Ref refs[] = {
      {{0.5, 0.5}, {0.64261291485482052832, 0.45788139443519221584}},
      {{2.9, 0.3}, {1.0000116325010503959, 0.000043250362781966487741}},
      {{3.1, -0.2}, {0.99999675081402256091, -0.000011660226564191563206}},
      {{-1.2, 2.5}, {17.389015433952859467, 18.16081919941549432}},
      {{5, 5}, {0.93037960374309511585, 0.038936190895121378954}},
      {{0.01, -4}, {100158.76469138166689, -1292951.308927430328}},
  };
  for (const Ref& r : refs) {
    CAPTURE(r.z);
    CHECK(std::abs(erf_cx(r.z) - r.v) <= 1e-13 * std::abs(r.v));
  }
  const ErfValue far = erf_cx_checked({7.5, 0.1});
  CHECK(std::abs(far.value - Cx(1.0, 2.7996528844149271889e-26)) < 1e-15);
}

TEST_CASE("erf agrees with an independent series on both sides of the seam") {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> u(0.0, 2 * pi), rad(2.5, 3.5);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const Cx z = std::polar(rad(gen), u(gen));
    worst = std::max(worst, rel(erf_cx(z), erf_series(z)) / std::max(1.0, std::abs(std::exp(-z * z))));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("erf symmetries and limits") {
  const Cx z(1.3, -0.7);
  CHECK(erf_cx(-z) == -erf_cx(z));
  CHECK(erf_cx(std::conj(z)) == std::conj(erf_cx(z)));
  CHECK(erfc_cx(Cx(10.0, 0.0)).real() == doctest::Approx(2.088487583762545e-45).epsilon(1e-12));
  CHECK(erf_cx_checked(Cx(30.0, 0.0)).saturated);
  CHECK_THROWS_AS(erf_cx(Cx(2e6, 0.0)), std::domain_error);
  CHECK_THROWS_AS(erf_cx(Cx(0.0, 40.0)), std::overflow_error);
}

TEST_CASE("Faddeeva function reference values") {
  CHECK(std::abs(faddeeva_w({1, 1}) - Cx(0.30474420525691259246, 0.20821893820283162729)) < 1e-14);
  CHECK(std::abs(faddeeva_w({4, 2}) - Cx(0.059686929610445898951, 0.11321005612448819575)) < 1e-14);
  CHECK(std::abs(faddeeva_w({0.3, 6}) - Cx(0.092559751568528550299, 0.0045078024247133273186)) < 1e-14);
}

TEST_CASE("Fresnel integral reference values") {
  struct Ref {
    Cx k, xi, v;
  };
  const Ref refs[] = {
      {1.0, 0.0, {0.44311346272637900682, 0.44311346272637900682}},
      {2.0, 1.5, {0.66476031319400942789, 0.70010979777575957138}},
      {0.5, {-3, 0.2}, {-0.24165858066700553788, -0.49637485086191873347}},
      {{0, 0.8}, {0.7, 0.1}, {1.2589012889731695625, 0.045517747427081925997}},
      {3.0, {-0.4, -0.6}, {0.0048472692271669420504, -0.0031349207597073046079}},
  };
  for (const Ref& r : refs) {
    CAPTURE(r.xi);
    CHECK(std::abs(fresnel_F(r.k, r.xi).value - r.v) <= 1e-13 * std::max(1.0, std::abs(r.v)));
  }
}

TEST_CASE("Fresnel closed form against the quadrature oracle") {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> uk(0.1, 10.0), ux(-10.0, 10.0), uy(-1.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double k = uk(gen);
    const Cx xi(ux(gen), uy(gen));
    worst = std::max(worst, rel(fresnel_F(k, xi).value, fresnel_F_quadrature(k, xi, 1e-11).value));
  }
  CHECK(worst <= 1e-9);
  // imaginary k (trapped regime)
  const Cx kk(0.0, 0.6);
  CHECK(rel(fresnel_F(kk, Cx(1.1, 0.4)).value, fresnel_F_quadrature(kk, Cx(1.1, 0.4), 1e-12).value) < 1e-10);
}

TEST_CASE("Fresnel derivative and ODE") {
  const double k = 1.7;
  const Cx xi(0.4, 0.2);
  const double h = 1e-5;
  const Cx d = (fresnel_F(k, xi + h).value - fresnel_F(k, xi - h).value) / (2 * h);
  CHECK(std::abs(d - std::exp(2.0 * I * k * xi * xi)) < 1e-8);
  // F(xi) + F(-xi) = 2 F(0)
  CHECK(std::abs(fresnel_F(k, xi).value + fresnel_F(k, -xi).value - 2.0 * fresnel_F(k, 0.0).value) < 1e-14);
}

TEST_CASE("Fresnel argument errors") {
  CHECK_THROWS(fresnel_F(0.0, 1.0));
  CHECK_THROWS(fresnel_F(Cx(0.0, -1.0), 1.0));
  CHECK_THROWS(fresnel_F_quadrature(1.0, 1.0, 1e-20));
  CHECK(fresnel_scale(1.0).real() > 0.0);
}
