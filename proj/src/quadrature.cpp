#include "edgewave/quadrature.hpp"

#include <array>
#include <stdexcept>

namespace edgewave::quad {

namespace {

constexpr int kMaxOrder = 64;

Rule build_rule(int n) {
  Rule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p2) / j;
      }
      dp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.nodes[i] = -x;
    r.nodes[n - 1 - i] = x;
    r.weights[i] = w;
    r.weights[n - 1 - i] = w;
  }
  return r;
}

}  // namespace

const Rule& gauss_legendre(int n) {
  static const std::array<Rule, kMaxOrder + 1> rules = [] {
    std::array<Rule, kMaxOrder + 1> all;
    for (int k = 1; k <= kMaxOrder; ++k) all[k] = build_rule(k);
    return all;
  }();
  if (n < 1 || n > kMaxOrder) throw std::invalid_argument("gauss_legendre: order must be in [1, 64]");
  return rules[n];
}

}  // namespace edgewave::quad
