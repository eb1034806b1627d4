#include "edgewave/oracle_fd.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SparseLU>

#include "edgewave/fit.hpp"

namespace edgewave {

Eigen::SparseMatrix<Cx> SparseSystem::matrix() const {
  Eigen::SparseMatrix<Cx> A(dimension, dimension);
  A.setFromTriplets(entries.begin(), entries.end());
  return A;
}

namespace {

bool on_outer(const GridSpec& s, int i, int j) { return i == 0 || j == 0 || i == s.nx - 1 || j == s.ny - 1; }

}  // namespace

SparseSystem assemble(const FdProblem& p) {
  const GridSpec& s = p.grid;
  s.validate();
  if (std::sqrt(std::abs(p.E)) * std::max(s.dx, s.dy) > 0.5)
    throw std::invalid_argument("assemble: grid too coarse for the energy (sqrt|E| h > 0.5)");
  if (p.alpha < 0.0) throw std::invalid_argument("assemble: alpha must be >= 0");
  if (p.alpha * s.dx > 0.5) throw std::invalid_argument("assemble: grid too coarse for the delta line (alpha dx > 0.5)");

  SparseSystem sys;
  sys.layout = make_field_grid(s, p.has_edge, p.a, p.alpha > 0.0);
  const FieldGrid& L = sys.layout;
  const int nx = s.nx, ny = s.ny, j0 = L.ray_row;
  const bool neumann = p.has_edge && p.bc == BoundaryCondition::neumann && L.tip_col >= 0;
  const int tip = p.has_edge && L.tip_col >= 0 && s.x(L.tip_col) == p.a ? L.tip_col : -1;
  auto idx = [nx](int i, int j) { return i + nx * j; };

  // Lower-face unknowns of a Neumann ray.
  sys.lower_face.assign(nx, -1);
  int n = nx * ny;
  if (neumann)
    for (int i = L.tip_col; i < nx; ++i)
      if (i != tip) sys.lower_face[i] = n++;
  sys.dimension = n;
  sys.rhs = VectorXcd::Zero(n);

  // Pinned unknowns and their values.
  std::vector<char> pinned(n, 0);
  VectorXcd value = VectorXcd::Zero(n);
  auto sample = [&](double x, double y, Side side) { return p.boundary ? p.boundary(x, y, side) : Cx{}; };
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      const int u = idx(i, j);
      const NodeTag t = L.tag(i, j);
      const bool closed_row = (j == 0 && p.bottom.kind == RowClosure::outgoing) ||
                              (j == ny - 1 && p.top.kind == RowClosure::outgoing);
      const bool outer = on_outer(s, i, j) && !(closed_row && i > 0 && i < nx - 1);
      if (t == NodeTag::edge && !neumann) {
        pinned[u] = 1;  // Dirichlet edge: value 0
      } else if (outer) {
        pinned[u] = 1;
        const bool face = t == NodeTag::edge && i != tip;
        value[u] = sample(s.x(i), s.y(j), face ? Side::top : Side::automatic);
        if (face && sys.lower_face[i] >= 0) {
          pinned[sys.lower_face[i]] = 1;
          value[sys.lower_face[i]] = sample(s.x(i), 0.0, Side::bottom);
        }
      }
    }

  const double cx = 1.0 / (s.dx * s.dx), cy = 1.0 / (s.dy * s.dy);
  auto potential = [&](int i) { return i == L.delta_col ? -2.0 * p.alpha / s.dx : 0.0; };
  auto add = [&](int row, int col, Cx c) {
    if (pinned[col])
      sys.rhs[row] -= c * value[col];
    else
      sys.entries.emplace_back(row, col, c);
  };
  // Unknown seen from a node on the given side of the ray.
  auto at = [&](int i, int j, bool from_below) {
    if (neumann && j == j0 && from_below && sys.lower_face[i] >= 0) return sys.lower_face[i];
    return idx(i, j);
  };
  auto is_face = [&](int i, int j) { return neumann && j == j0 && sys.lower_face[i] >= 0; };

  for (int u = 0; u < n; ++u)
    if (pinned[u]) {
      sys.entries.emplace_back(u, u, Cx(1.0));
      sys.rhs[u] = value[u];
    }

  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      const double x = s.x(i), y = s.y(j);
      const Cx f = p.source ? p.source(x, y) : Cx{};
      const Cx diag = 2.0 * cx + 2.0 * cy + potential(i) - p.E;

      if (is_face(i, j)) {
        // Mirror stencil on each face: the ghost across the ray equals the
        // neighbour on the same side.
        for (int face = 0; face < 2; ++face) {
          const bool below = face == 1;
          const int u = below ? sys.lower_face[i] : idx(i, j);
          if (pinned[u]) continue;
          sys.entries.emplace_back(u, u, diag);
          add(u, i - 1 == tip ? idx(tip, j) : at(i - 1, j, below), -cx);
          add(u, at(i + 1, j, below), -cx);
          add(u, idx(i, below ? j - 1 : j + 1), -2.0 * cy);
          sys.rhs[u] += f;
        }
        continue;
      }

      const int u = idx(i, j);
      if (pinned[u]) continue;
      Cx d = diag;
      sys.rhs[u] += f;
      add(u, idx(i - 1, j), -cx);
      if (neumann && i == tip && j == j0 && sys.lower_face[i + 1] >= 0) {
        add(u, idx(i + 1, j), -0.5 * cx);
        add(u, sys.lower_face[i + 1], -0.5 * cx);
      } else {
        add(u, idx(i + 1, j), -cx);
      }
      if (j == 0) {
        d -= p.bottom.t * cy;
        if (p.bottom.incident)
          sys.rhs[u] += cy * (p.bottom.incident(x, y - s.dy) - p.bottom.t * p.bottom.incident(x, y));
      } else {
        add(u, at(i, j - 1, false), -cy);
      }
      if (j == ny - 1) {
        d -= p.top.t * cy;
        if (p.top.incident) sys.rhs[u] += cy * (p.top.incident(x, y + s.dy) - p.top.t * p.top.incident(x, y));
      } else {
        add(u, at(i, j + 1, true), -cy);
      }
      sys.entries.emplace_back(u, u, d);
    }
  return sys;
}

VectorXcd solve_vector(const SparseSystem& s, double tol, SolveStats* stats) {
  if (!(tol >= 1e-12 && tol <= 1e-6)) throw std::invalid_argument("solve: tol must lie in [1e-12, 1e-6]");
  const Eigen::SparseMatrix<Cx> A = s.matrix();
  const double bnorm = s.rhs.norm();
  SolveStats st;
  if (bnorm == 0.0) {
    if (stats) *stats = st;
    return VectorXcd::Zero(s.dimension);
  }
  Eigen::SparseLU<Eigen::SparseMatrix<Cx>, Eigen::COLAMDOrdering<int>> lu;
  lu.compute(A);
  if (lu.info() != Eigen::Success) throw NumericalError("solve: sparse LU factorization failed: " + lu.lastErrorMessage());
  VectorXcd x = lu.solve(s.rhs);
  VectorXcd r = s.rhs - A * x;
  st.residual = r.norm() / bnorm;
  while (st.residual > tol && st.refinements < 3) {
    x += lu.solve(r);
    r = s.rhs - A * x;
    st.residual = r.norm() / bnorm;
    ++st.refinements;
  }
  if (stats) *stats = st;
  if (!(st.residual <= tol)) throw NumericalError("solve: residual above tolerance", {}, st.residual);
  return x;
}

FieldGrid solve(const SparseSystem& s, double tol, SolveStats* stats) {
  const VectorXcd x = solve_vector(s, tol, stats);
  FieldGrid g = s.layout;
  const int nx = g.spec.nx;
  for (int j = 0; j < g.spec.ny; ++j)
    for (int i = 0; i < nx; ++i) g.values(i, j) = x[i + nx * j];
  return g;
}

CompareReport compare(const FieldGrid& exact, const FieldGrid& fd, int band) {
  const GridSpec& s = exact.spec;
  if (s.nx != fd.spec.nx || s.ny != fd.spec.ny || s.x0 != fd.spec.x0 || s.y0 != fd.spec.y0 || s.dx != fd.spec.dx ||
      s.dy != fd.spec.dy)
    throw std::invalid_argument("compare: grids differ");
  const int ray = exact.ray_row >= 0 ? exact.ray_row : fd.ray_row;
  const int tip = exact.ray_row >= 0 ? exact.tip_col : fd.tip_col;
  const int dcol = exact.delta_col >= 0 ? exact.delta_col : fd.delta_col;
  const double xref = ray >= 0 && tip >= 0 ? s.x(tip) : 0.0;

  CompareReport rep;
  rep.regions = {{"upper-right"}, {"upper-left"}, {"lower-left"}, {"lower-right"}};
  std::vector<double> num(4, 0.0), den(4, 0.0), emax(4, 0.0);
  double num_all = 0.0, den_all = 0.0, dmax = 0.0, emax_all = 0.0;
  for (int j = 1; j < s.ny - 1; ++j)
    for (int i = 1; i < s.nx - 1; ++i) {
      if (ray >= 0 && tip >= 0 && std::max(std::max(0, tip - i), std::abs(j - ray)) <= band) continue;
      if (dcol >= 0 && std::abs(i - dcol) <= band) continue;
      const double d = std::abs(exact.values(i, j) - fd.values(i, j));
      const double e = std::abs(exact.values(i, j));
      const bool right = s.x(i) >= xref, upper = s.y(j) >= 0.0;
      const int q = upper ? (right ? 0 : 1) : (right ? 3 : 2);
      num[q] += d * d;
      den[q] += e * e;
      emax[q] = std::max(emax[q], e);
      rep.regions[q].max_rel = std::max(rep.regions[q].max_rel, d);
      ++rep.regions[q].nodes;
      num_all += d * d;
      den_all += e * e;
      dmax = std::max(dmax, d);
      emax_all = std::max(emax_all, e);
      ++rep.nodes;
    }
  auto ratio = [](double a, double b) { return b > 0.0 ? a / b : (a > 0.0 ? INFINITY : 0.0); };
  for (int q = 0; q < 4; ++q) {
    rep.regions[q].l2_rel = std::sqrt(ratio(num[q], den[q]));
    rep.regions[q].max_rel = ratio(rep.regions[q].max_rel, emax[q]);
  }
  rep.l2_rel = std::sqrt(ratio(num_all, den_all));
  rep.max_rel = ratio(dmax, emax_all);
  return rep;
}

TransverseMode transverse_mode(double alpha, double x0, double dx, int n) {
  if (n < 3 || !(dx > 0.0)) throw std::invalid_argument("transverse_mode: need n >= 3 and dx > 0");
  const double t = -x0 / dx;
  const int i0 = static_cast<int>(std::lround(t));
  if (std::abs(t - i0) > 1e-9 || i0 < 0 || i0 >= n) throw std::invalid_argument("transverse_mode: x = 0 is not a node");
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    T(i, i) = 2.0 / (dx * dx);
    if (i > 0) T(i, i - 1) = T(i - 1, i) = -1.0 / (dx * dx);
  }
  T(i0, i0) -= 2.0 * alpha / dx;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
  if (es.info() != Eigen::Success) throw NumericalError("transverse_mode: eigensolver failed");
  TransverseMode m{es.eigenvalues()(0), es.eigenvectors().col(0)};
  m.phi /= std::sqrt(m.phi.squaredNorm() * dx);
  if (m.phi(i0) < 0.0) m.phi = -m.phi;
  return m;
}

TailScanResult fd_tail_scan(double alpha, double k, const std::vector<double>& a_list, const FdTailOptions& opt) {
  if (!(alpha > 0.0) || !(k > 0.0) || !(k < alpha))
    throw std::invalid_argument("fd_tail_scan: need 0 < k < alpha (guided wave below the continuum)");
  if (a_list.size() < 2) throw std::invalid_argument("fd_tail_scan: need at least two impurity positions");
  const double h = opt.h / alpha;
  const int nx = static_cast<int>(std::lround(2.0 * opt.half_width / opt.h)) + 1;
  const int ny = static_cast<int>(std::lround(2.0 * opt.half_height / opt.h)) + 1;
  const GridSpec spec{-opt.half_width / alpha, -opt.half_height / alpha, h, h, nx, ny};
  const double E = k * k - alpha * alpha;

  const TransverseMode mode = transverse_mode(alpha, spec.x0 + h, h, nx - 2);
  Eigen::VectorXd phi = Eigen::VectorXd::Zero(nx);
  phi.segment(1, nx - 2) = mode.phi;
  const double kh = 2.0 / h * std::asin(0.5 * h * std::sqrt(E - mode.mu));
  const Cx t = std::exp(I * (kh * h));
  auto incident = [&](double x, double y) {
    const int i = spec.column_of(x);
    return i < 0 ? Cx{} : phi(i) * std::exp(-I * (kh * y));
  };
  const int probe = spec.row_of(opt.probe_y / alpha);
  if (probe < 0) throw std::invalid_argument("fd_tail_scan: probe row is not on the grid");

  TailScanResult res;
  res.alpha = alpha;
  res.k = k;
  res.a = a_list;
  std::vector<double> logs;
  for (double a : a_list) {
    FdProblem p;
    p.grid = spec;
    p.alpha = alpha;
    p.has_edge = true;
    p.a = a;
    p.E = E;
    p.bottom = {RowClosure::outgoing, t, incident};
    p.top = {RowClosure::outgoing, t, incident};
    const FieldGrid g = solve(assemble(p), 1e-10);
    Cx R{};
    for (int i = 0; i < nx; ++i) R += phi(i) * (g.values(i, probe) - incident(spec.x(i), spec.y(probe))) * h;
    const double amp = std::abs(R);
    if (!(amp >= 1e-300)) throw NumericalError("fd_tail_scan: reflected amplitude below 1e-300", {}, amp);
    res.amplitude.push_back(amp);
    logs.push_back(std::log(amp));
  }
  const LineFit f = fit_line(res.a, logs);
  res.slope = f.slope;
  res.residual = f.residual;
  return res;
}

}  // namespace edgewave
