#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "edgewave/types.hpp"

namespace edgewave {

enum class NodeTag : std::uint8_t { interior, edge, delta_line, outer_boundary };

/// Rectangular lattice x_i = x0 + i dx, y_j = y0 + j dy.
struct GridSpec {
  double x0 = 0.0, y0 = 0.0;
  double dx = 1.0, dy = 1.0;
  int nx = 0, ny = 0;

  /// Node coordinates, snapped to exactly 0 on the lattice line through the
  /// origin so that sign-sensitive geometry sees a true zero.
  double x(int i) const;
  double y(int j) const;

  /// Index of the lattice line through `value`, or -1 when no line lies
  /// within 1e-9 cells of it.
  int column_of(double value) const;
  int row_of(double value) const;

  void validate() const;
};

/// Grid spec spanning [xmin, xmax] x [ymin, ymax] with n nodes per side.
GridSpec square_grid(double xmin, double xmax, double ymin, double ymax, int nx, int ny);

/// Sampled complex field with per-node tags. `values(i, j)` is the node
/// (x_i, y_j). The edge is the ray {y = 0, x >= a}; `ray_row`, `tip_col` and
/// `delta_col` are -1 when absent.
struct FieldGrid {
  GridSpec spec;
  MatrixXcd values;
  std::vector<NodeTag> mask;
  int ray_row = -1;
  int tip_col = -1;
  int delta_col = -1;

  NodeTag tag(int i, int j) const { return mask[static_cast<std::size_t>(i) + static_cast<std::size_t>(spec.nx) * j]; }
  double max_abs() const;
};

/// Allocates a zero field and tags its nodes. Edge nodes take precedence
/// over outer-boundary nodes, which take precedence over the delta line.
/// Throws if `has_edge` and the edge does not lie on lattice lines, or if
/// `has_delta_line` and x = 0 is not a lattice column.
FieldGrid make_field_grid(const GridSpec& spec, bool has_edge, double a, bool has_delta_line);

/// Evaluates `f(x, y, i, j)` on every node, splitting rows across `threads`
/// workers. Each node is written once, so the result does not depend on the
/// number of workers.
void fill_grid(FieldGrid& grid, const std::function<Cx(double, double, int, int)>& f, int threads = 0);

/// Format a double with 17 significant digits in scientific notation.
std::string format_double(double v);

/// CSV with header `x,y,re,im`; outer loop over y, inner loop over x.
void write_csv(std::ostream& os, const FieldGrid& grid);
void write_csv(const std::string& path, const FieldGrid& grid);

/// Reads the CSV format back. Node tags are reset to interior/outer_boundary.
FieldGrid read_csv(std::istream& is);

}  // namespace edgewave
