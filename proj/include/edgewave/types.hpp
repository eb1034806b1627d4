#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace edgewave {

using Cx = std::complex<double>;

using VectorXcd = Eigen::VectorXcd;
using MatrixXcd = Eigen::MatrixXcd;

inline constexpr double pi = std::numbers::pi;
inline constexpr Cx I{0.0, 1.0};

/// Raised when an iterative or adaptive numerical procedure does not reach
/// its tolerance. Carries the best value obtained so far.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, Cx partial = {}, double achieved = 0.0)
      : std::runtime_error(what), partial_(partial), achieved_(achieved) {}

  Cx partial() const { return partial_; }
  double achieved() const { return achieved_; }

 private:
  Cx partial_;
  double achieved_;
};

enum class BoundaryCondition { dirichlet, neumann };

inline const char* to_string(BoundaryCondition bc) {
  return bc == BoundaryCondition::dirichlet ? "dirichlet" : "neumann";
}

}  // namespace edgewave
