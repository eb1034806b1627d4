#include <doctest.h>

#include "edgewave/oracle_fd.hpp"
#include "edgewave/sommerfeld.hpp"

using namespace edgewave;

TEST_CASE("discrete plane wave is reproduced exactly") {
  const GridSpec s = square_grid(-1, 1, -1, 1, 41, 41);
  const double q = 3.0;
  FdProblem p;
  p.grid = s;
  p.has_edge = false;
  p.E = 4.0 * std::pow(std::sin(0.5 * q * s.dy), 2) / (s.dy * s.dy);
  p.boundary = [&](double, double y, Side) { return std::exp(I * (q * y)); };
  const FieldGrid g = solve(assemble(p), 1e-12);
  double err = 0.0;
  for (int j = 0; j < s.ny; ++j)
    for (int i = 0; i < s.nx; ++i) err = std::max(err, std::abs(g.values(i, j) - std::exp(I * (q * s.y(j)))));
  CHECK(err < 1e-10);
}

TEST_CASE("manufactured solution converges at second order") {
  auto ex = [](double x, double y) { return Cx(std::cos(x + 2 * y), x * x * y); };
  double err[2];
  const int ns[2] = {41, 81};
  for (int n = 0; n < 2; ++n) {
    FdProblem p;
    p.grid = square_grid(-1, 1, -1, 1, ns[n], ns[n]);
    p.has_edge = false;
    p.E = 1.0;
    p.boundary = [&](double x, double y, Side) { return ex(x, y); };
    p.source = [&](double x, double y) { return Cx(5 * std::cos(x + 2 * y), -2 * y) - ex(x, y); };
    const FieldGrid g = solve(assemble(p), 1e-10);
    err[n] = 0.0;
    for (int j = 0; j < ns[n]; ++j)
      for (int i = 0; i < ns[n]; ++i)
        err[n] = std::max(err[n], std::abs(g.values(i, j) - ex(p.grid.x(i), p.grid.y(j))));
  }
  CHECK(std::log2(err[0] / err[1]) > 1.8);
}

TEST_CASE("Neumann assembly adds lower-face unknowns and a symmetric pattern") {
  FdProblem p;
  p.grid = square_grid(-1, 1, -1, 1, 21, 21);
  p.bc = BoundaryCondition::neumann;
  p.a = 0.5;
  p.E = 1.0;
  const SparseSystem s = assemble(p);
  const int extra = s.dimension - 21 * 21;
  CHECK(extra > 0);
  const Eigen::SparseMatrix<Cx> A = s.matrix();
  Eigen::SparseMatrix<double> pat = A.cwiseAbs().cast<double>();
  for (int k = 0; k < pat.outerSize(); ++k)
    for (Eigen::SparseMatrix<double>::InnerIterator it(pat, k); it; ++it) it.valueRef() = 1.0;
  CHECK((Eigen::SparseMatrix<double>(pat.transpose()) - pat).norm() == 0.0);
}

TEST_CASE("FD oracle reproduces the Sommerfeld field") {
  const double k = 2.0;
  const GridSpec s = square_grid(-2, 2, -2, 2, 101, 101);
  for (BoundaryCondition bc : {BoundaryCondition::dirichlet, BoundaryCondition::neumann}) {
    const EdgeGeometry geom{0.0, bc};
    FdProblem p;
    p.grid = s;
    p.bc = bc;
    p.E = k * k;
    p.boundary = [&](double x, double y, Side side) { return edge_field(k, geom, {x, y, 0.0}, 1.0, side); };
    const CompareReport c = compare(field_on_grid(k, geom, s), solve(assemble(p), 1e-10));
    CHECK(c.l2_rel < 0.02);
    CHECK(c.regions.size() == 4);
  }
}

TEST_CASE("discrete transverse bound state") {
  for (double alpha : {0.5, 1.0}) {
    const double h = 0.05 / alpha;
    const int n = static_cast<int>(std::lround(16.0 / 0.05)) + 1;
    const TransverseMode m = transverse_mode(alpha, -8.0 / alpha, h, n);
    // lattice bound state r^|i| with r^2 + 2 alpha h r - 1 = 0; the walls at
    // 8 / alpha shift it by about r^320
    const double r = std::sqrt(alpha * alpha * h * h + 1.0) - alpha * h;
    CHECK(m.mu == doctest::Approx((2.0 - r - 1.0 / r) / (h * h)).epsilon(1e-5));
    CHECK(m.phi.squaredNorm() * h == doctest::Approx(1.0));
    CHECK(std::abs(m.mu + alpha * alpha) < 2e-3 * alpha * alpha);
  }
}

TEST_CASE("argument checks") {
  FdProblem p;
  p.grid = square_grid(-1, 1, -1, 1, 11, 11);
  p.E = 100.0;
  CHECK_THROWS(assemble(p));
  p.E = 1.0;
  p.a = 0.33;
  CHECK_THROWS(assemble(p));
  p.a = 0.0;
  CHECK_THROWS(solve_vector(assemble(p), 1e-3));
  CHECK_THROWS(fd_tail_scan(1.0, 2.0, {1, 2}));
}
