#include "edgewave/field_grid.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

namespace edgewave {

namespace {

int snap_index(double origin, double step, int count, double value) {
  const double t = (value - origin) / step;
  const double r = std::round(t);
  if (std::abs(t - r) > 1e-9 || r < 0 || r >= count) return -1;
  return static_cast<int>(r);
}

}  // namespace

double GridSpec::x(int i) const {
  const double v = x0 + i * dx;
  return std::abs(v) < 1e-9 * dx ? 0.0 : v;
}

double GridSpec::y(int j) const {
  const double v = y0 + j * dy;
  return std::abs(v) < 1e-9 * dy ? 0.0 : v;
}

int GridSpec::column_of(double value) const { return snap_index(x0, dx, nx, value); }
int GridSpec::row_of(double value) const { return snap_index(y0, dy, ny, value); }

void GridSpec::validate() const {
  if (!(dx > 0.0) || !(dy > 0.0)) throw std::invalid_argument("grid: dx and dy must be positive");
  if (nx < 3 || ny < 3) throw std::invalid_argument("grid: need at least 3 nodes per direction");
  if (!std::isfinite(x0) || !std::isfinite(y0)) throw std::invalid_argument("grid: origin must be finite");
}

GridSpec square_grid(double xmin, double xmax, double ymin, double ymax, int nx, int ny) {
  GridSpec s{xmin, ymin, (xmax - xmin) / (nx - 1), (ymax - ymin) / (ny - 1), nx, ny};
  s.validate();
  return s;
}

double FieldGrid::max_abs() const { return values.size() == 0 ? 0.0 : values.cwiseAbs().maxCoeff(); }

FieldGrid make_field_grid(const GridSpec& spec, bool has_edge, double a, bool has_delta_line) {
  spec.validate();
  FieldGrid g;
  g.spec = spec;
  g.values = MatrixXcd::Zero(spec.nx, spec.ny);
  g.mask.assign(static_cast<std::size_t>(spec.nx) * spec.ny, NodeTag::interior);

  if (has_edge) {
    g.ray_row = spec.row_of(0.0);
    if (g.ray_row < 0) throw std::invalid_argument("grid: y = 0 is not a lattice row");
    // The tip may sit left of the grid (whole row is edge), right of it (no
    // edge nodes) or on a column.
    if (a <= spec.x0) {
      g.tip_col = 0;
    } else if (a > spec.x(spec.nx - 1)) {
      g.tip_col = -1;
    } else {
      g.tip_col = spec.column_of(a);
      if (g.tip_col < 0) throw std::invalid_argument("grid: edge tip a is not on a lattice column");
    }
  }
  if (has_delta_line) {
    g.delta_col = spec.column_of(0.0);
    if (g.delta_col < 0) throw std::invalid_argument("grid: x = 0 is not a lattice column");
  }

  for (int j = 0; j < spec.ny; ++j) {
    for (int i = 0; i < spec.nx; ++i) {
      NodeTag t = NodeTag::interior;
      if (i == g.delta_col) t = NodeTag::delta_line;
      if (i == 0 || j == 0 || i == spec.nx - 1 || j == spec.ny - 1) t = NodeTag::outer_boundary;
      if (j == g.ray_row && i >= g.tip_col && g.tip_col >= 0) t = NodeTag::edge;
      g.mask[static_cast<std::size_t>(i) + static_cast<std::size_t>(spec.nx) * j] = t;
    }
  }
  return g;
}

void fill_grid(FieldGrid& grid, const std::function<Cx(double, double, int, int)>& f, int threads) {
  const GridSpec& s = grid.spec;
  if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = std::min(threads, s.ny);
  auto rows = [&](int j0, int j1) {
    for (int j = j0; j < j1; ++j)
      for (int i = 0; i < s.nx; ++i) grid.values(i, j) = f(s.x(i), s.y(j), i, j);
  };
  if (threads == 1) {
    rows(0, s.ny);
    return;
  }
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) {
      const int j0 = s.ny * t / threads, j1 = s.ny * (t + 1) / threads;
      pool.emplace_back([&, t, j0, j1] {
        try {
          rows(j0, j1);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

void write_csv(std::ostream& os, const FieldGrid& grid) {
  const GridSpec& s = grid.spec;
  os << "x,y,re,im\n";
  for (int j = 0; j < s.ny; ++j) {
    const std::string y = format_double(s.y(j));
    for (int i = 0; i < s.nx; ++i) {
      const Cx v = grid.values(i, j);
      os << format_double(s.x(i)) << ',' << y << ',' << format_double(v.real()) << ',' << format_double(v.imag())
         << '\n';
    }
  }
}

void write_csv(const std::string& path, const FieldGrid& grid) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path + " for writing");
  write_csv(os, grid);
}

FieldGrid read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "x,y,re,im") throw std::runtime_error("read_csv: missing x,y,re,im header");
  std::vector<double> xs, ys;
  std::vector<Cx> vals;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    double f[4];
    const char* p = line.data();
    const char* end = line.data() + line.size();
    for (int c = 0; c < 4; ++c) {
      auto [next, ec] = std::from_chars(p, end, f[c]);
      if (ec != std::errc()) throw std::runtime_error("read_csv: bad number in line: " + line);
      p = next;
      if (c < 3) {
        if (p == end || *p != ',') throw std::runtime_error("read_csv: expected 4 columns: " + line);
        ++p;
      }
    }
    xs.push_back(f[0]);
    ys.push_back(f[1]);
    vals.emplace_back(f[2], f[3]);
  }
  if (vals.empty()) throw std::runtime_error("read_csv: no data rows");
  int nx = 1;
  while (nx < static_cast<int>(ys.size()) && ys[nx] == ys[0]) ++nx;
  if (vals.size() % nx != 0) throw std::runtime_error("read_csv: ragged grid");
  const int ny = static_cast<int>(vals.size()) / nx;
  GridSpec s{xs[0], ys[0], nx > 1 ? xs[1] - xs[0] : 1.0, ny > 1 ? ys[nx] - ys[0] : 1.0, nx, ny};
  FieldGrid g;
  g.spec = s;
  g.values.resize(nx, ny);
  g.mask.assign(vals.size(), NodeTag::interior);
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      g.values(i, j) = vals[static_cast<std::size_t>(j) * nx + i];
      if (i == 0 || j == 0 || i == nx - 1 || j == ny - 1)
        g.mask[static_cast<std::size_t>(j) * nx + i] = NodeTag::outer_boundary;
    }
  return g;
}

}  // namespace edgewave
