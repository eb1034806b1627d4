#pragma once

#include <vector>

namespace edgewave {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // rms deviation of the samples from the line
};

/// Least-squares line through (x_i, y_i). Needs at least two distinct x.
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace edgewave
