#pragma once

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Sparse>

#include "edgewave/field_grid.hpp"
#include "edgewave/geometry.hpp"
#include "edgewave/green.hpp"

namespace edgewave {

/// Sampler for outer-boundary data; the side argument selects the face for
/// nodes on the edge ray.
using BoundarySampler = std::function<Cx(double x, double y, Side side)>;

/// Row closure at y = y0 (bottom) or y = y_max (top). `pinned` uses the
/// boundary sampler. `outgoing` closes the row with the ghost value
///   psi_ghost = inc_ghost + t (psi_edge - inc_edge)
/// where inc is `incident` and t = exp(i k dy) is the one-step factor of
/// the outgoing guided wave.
struct RowClosure {
  enum Kind { pinned, outgoing } kind = pinned;
  Cx t;
  std::function<Cx(double x, double y)> incident;
};

/// (-Delta_h + V - E) psi = f with V = -2 alpha / dx on the x = 0 column.
/// alpha = 0 drops the delta line; has_edge = false drops the edge.
struct FdProblem {
  GridSpec grid;
  double alpha = 0.0;
  bool has_edge = true;
  double a = 0.0;
  BoundaryCondition bc = BoundaryCondition::dirichlet;
  double E = 0.0;
  BoundarySampler boundary;                   // empty: zero data
  std::function<Cx(double, double)> source;  // empty: f = 0
  RowClosure bottom, top;
};

/// Assembled system. Unknown i + nx j is node (i, j); Neumann edges add one
/// extra unknown per ray node x > a for its lower face, listed in `lower_face`.
struct SparseSystem {
  int dimension = 0;
  std::vector<Eigen::Triplet<Cx>> entries;
  VectorXcd rhs;
  FieldGrid layout;                // spec and node tags of the solution
  std::vector<int> lower_face;     // per column: extra unknown index or -1

  Eigen::SparseMatrix<Cx> matrix() const;
};

/// Throws on grid misalignment of a or 0, and when sqrt(|E|) h or alpha dx
/// exceeds 0.5.
SparseSystem assemble(const FdProblem& p);

struct SolveStats {
  double residual = 0.0;  // ||b - A x|| / ||b||
  int refinements = 0;
};

/// Sparse LU with iterative refinement. tol in [1e-12, 1e-6]. Throws
/// NumericalError with the achieved relative residual on failure.
VectorXcd solve_vector(const SparseSystem& s, double tol, SolveStats* stats = nullptr);

/// Same, reshaped onto the grid (upper-face values on a Neumann ray).
FieldGrid solve(const SparseSystem& s, double tol, SolveStats* stats = nullptr);

struct RegionError {
  std::string name;
  double l2_rel = 0.0;
  double max_rel = 0.0;
  long nodes = 0;
};

struct CompareReport {
  double l2_rel = 0.0;
  double max_rel = 0.0;
  long nodes = 0;
  std::vector<RegionError> regions;  // quadrants about (tip or origin)
};

/// Relative discrepancy of `fd` against `exact` on identical grids,
/// skipping outer nodes and `band`-cell strips about the ray and x = 0.
CompareReport compare(const FieldGrid& exact, const FieldGrid& fd, int band = 2);

/// Lowest eigenpair of the discrete transverse operator
/// -D_xx - (2 alpha / dx) delta_{x,0} on x_i = x0 + i dx with zero walls
/// beyond the ends. The mode is normalized to sum phi^2 dx = 1, phi(0) > 0.
struct TransverseMode {
  double mu = 0.0;
  Eigen::VectorXd phi;
};
TransverseMode transverse_mode(double alpha, double x0, double dx, int n);

struct FdTailOptions {
  double half_width = 8.0;   // box |x| <= half_width / alpha
  double half_height = 10.0; // box |y| <= half_height / alpha
  double h = 0.05;           // spacing times alpha
  double probe_y = 3.0;      // reflection read-out row times 1 / alpha
};

/// Reflected guided amplitude for an edge {y = 0, x >= a} hit by the
/// discrete guided wave coming down from y > 0, one solve per a, and the
/// slope of ln|R| against a.
TailScanResult fd_tail_scan(double alpha, double k, const std::vector<double>& a_list, const FdTailOptions& opt = {});

}  // namespace edgewave
