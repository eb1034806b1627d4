#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "edgewave/types.hpp"

namespace edgewave::quad {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule, cached per n. Roots are polished by Newton
/// iteration on the three-term recurrence.
const Rule& gauss_legendre(int n);

template <class T>
struct Result {
  T value{};
  double abs_error = 0.0;
  int evaluations = 0;
};

/// Fixed n-point rule on [a, b].
template <class T, class F>
T fixed(F&& f, double a, double b, int n = 20) {
  const Rule& r = gauss_legendre(n);
  const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
  T acc{};
  for (std::size_t i = 0; i < r.nodes.size(); ++i) acc += r.weights[i] * f(mid + half * r.nodes[i]);
  return acc * half;
}

/// Composite rule with `panels` equal panels of an n-point rule.
template <class T, class F>
T composite(F&& f, double a, double b, int panels, int n = 16) {
  const double w = (b - a) / panels;
  T acc{};
  for (int p = 0; p < panels; ++p) acc += fixed<T>(f, a + p * w, a + (p + 1) * w, n);
  return acc;
}

/// Adaptive bisection with a 20-point rule; each interval is accepted when the
/// whole-interval estimate and the sum of its two halves agree within the
/// local share of `abs_tol`, or within `rel_floor` of their own size (the
/// rounding level of the integrand). Throws NumericalError after
/// `max_intervals`.
template <class T, class F>
Result<T> adaptive(F&& f, double a, double b, double abs_tol, int max_intervals = 20000, double rel_floor = 64 * 2.2e-16) {
  struct Piece {
    double lo, hi;
    T whole;
  };
  constexpr int n = 20;
  Result<T> out;
  std::vector<Piece> stack;
  stack.push_back({a, b, fixed<T>(f, a, b, n)});
  out.evaluations = n;
  int accepted = 0;
  const double length = std::abs(b - a);
  while (!stack.empty()) {
    Piece piece = stack.back();
    stack.pop_back();
    const double mid = 0.5 * (piece.lo + piece.hi);
    const T left = fixed<T>(f, piece.lo, mid, n);
    const T right = fixed<T>(f, mid, piece.hi, n);
    out.evaluations += 2 * n;
    const T refined = left + right;
    const double diff = std::abs(refined - piece.whole);
    const double share = abs_tol * std::abs(piece.hi - piece.lo) / length;
    if (diff <= share || diff <= rel_floor * std::abs(refined) ||
        std::abs(piece.hi - piece.lo) < 1e-14 * length) {
      out.value += refined;
      out.abs_error += diff;
      ++accepted;
      continue;
    }
    if (accepted + static_cast<int>(stack.size()) >= max_intervals) {
      out.value += refined;
      out.abs_error += diff;
      for (const Piece& rest : stack) out.value += rest.whole;
      throw NumericalError("adaptive quadrature did not converge", Cx(out.value), out.abs_error);
    }
    stack.push_back({mid, piece.hi, right});
    stack.push_back({piece.lo, mid, left});
  }
  return out;
}

}  // namespace edgewave::quad
