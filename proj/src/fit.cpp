#include "edgewave/fit.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/QR>

namespace edgewave {

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const auto n = static_cast<Eigen::Index>(x.size());
  if (n < 2 || x.size() != y.size()) throw std::invalid_argument("fit_line: need two or more (x, y) pairs");
  Eigen::MatrixXd A(n, 2);
  Eigen::VectorXd b(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    A(i, 0) = x[i];
    A(i, 1) = 1.0;
    b(i) = y[i];
  }
  auto qr = A.colPivHouseholderQr();
  if (qr.rank() < 2) throw std::invalid_argument("fit_line: x values are all equal");
  const Eigen::Vector2d c = qr.solve(b);
  LineFit f{c(0), c(1), 0.0};
  f.residual = std::sqrt((A * c - b).squaredNorm() / n);
  return f;
}

}  // namespace edgewave
