#include "edgewave/delta_1d.hpp"

#include <cmath>

namespace edgewave {

DeltaWell::DeltaWell(double alpha) : alpha_(alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw std::invalid_argument("DeltaWell: alpha must be positive");
}

double psi0(const DeltaWell& well, double x) { return std::exp(-well.alpha() * std::abs(x)); }

ScatteringCoefficients scattering_coeffs(const DeltaWell& well, double p) {
  if (!(p > 0.0)) throw std::invalid_argument("scattering_coeffs: p must be positive");
  const Cx den(p, -well.alpha());
  return {p, I * well.alpha() / den, Cx(p) / den};
}

Cx smatrix_pole(const DeltaWell& well) {
  auto denominator = [&](Cx p) { return p - I * well.alpha(); };
  Cx p(0.0, 0.5 * well.alpha());
  for (int it = 0; it < 50; ++it) {
    const Cx step = denominator(p) / Cx(1.0);
    p -= step;
    if (std::abs(step) <= 1e-15 * well.alpha()) break;
  }
  return p;
}

Cx reflection_residue(const DeltaWell& well, int nodes) {
  const Cx pole = smatrix_pole(well);
  const double radius = 0.5 * well.alpha();
  Cx acc{};
  for (int j = 0; j < nodes; ++j) {
    const Cx e = std::polar(1.0, 2.0 * pi * j / nodes);
    const Cx p = pole + radius * e;
    const Cx A = I * well.alpha() / (p - I * well.alpha());
    acc += A * radius * e;  // A dp / (2 pi i) with dp = i r e dtheta
  }
  return acc / static_cast<double>(nodes);
}

double bound_mode(const DeltaWell& well, double x) {
  return std::sqrt(well.alpha()) * std::exp(-well.alpha() * std::abs(x));
}

double even_phase(const DeltaWell& well, double p) { return std::atan2(well.alpha(), p); }

double even_mode(const DeltaWell& well, double p, double x) {
  return std::cos(p * std::abs(x) + even_phase(well, p)) / std::sqrt(pi);
}

double odd_mode(double p, double x) { return std::sin(p * x) / std::sqrt(pi); }

}  // namespace edgewave
