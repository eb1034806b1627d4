#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>

#include "edgewave/bound_edge.hpp"
#include "edgewave/cli.hpp"
#include "edgewave/delta_1d.hpp"
#include "edgewave/fit.hpp"
#include "edgewave/green.hpp"
#include "edgewave/oracle_fd.hpp"
#include "edgewave/quadrature.hpp"
#include "edgewave/sommerfeld.hpp"
#include "edgewave/specfun.hpp"

namespace edgewave::cli {

namespace {

// Portable uniform draws from a fixed-seed engine.
struct Draw {
  std::mt19937_64 gen{20240917};
  double operator()(double lo, double hi) { return lo + (hi - lo) * static_cast<double>(gen() >> 11) * 0x1.0p-53; }
};

class Report {
 public:
  explicit Report(std::ostream& os) : os_(os) {}

  void check(const char* name, bool pass, const char* fmt, double a, double b = 0.0) {
    char detail[200];
    std::snprintf(detail, sizeof detail, fmt, a, b);
    os_ << (pass ? "PASS    " : "FAIL    ") << name << "  " << detail << '\n';
    all_ &= pass;
  }
  void finding(const char* name, const char* fmt, double a, double b = 0.0) {
    char detail[200];
    std::snprintf(detail, sizeof detail, fmt, a, b);
    os_ << "FINDING " << name << "  " << detail << '\n';
  }
  bool all() const { return all_; }

 private:
  std::ostream& os_;
  bool all_ = true;
};

double order(double coarse, double fine) { return std::log2(coarse / fine); }

void delta_checks(Report& r, double alpha) {
  const DeltaWell well(alpha);
  double flux = 0.0;
  for (int i = 0; i < 100; ++i) {
    const ScatteringCoefficients c = scattering_coeffs(well, std::pow(10.0, -3.0 + 6.0 * i / 99));
    flux = std::max(flux, std::abs(std::norm(c.A) + std::norm(c.B) - 1.0));
  }
  r.check("delta_1d.flux_conservation", flux <= 1e-13, "max||A|^2+|B|^2-1| = %.3e (tol 1e-13)", flux);
  const double pole = std::abs(smatrix_pole(well) - Cx(0.0, alpha));
  r.check("delta_1d.pole", pole <= 1e-12, "|pole - i alpha| = %.3e (tol 1e-12)", pole);
  const double res = std::abs(reflection_residue(well) - Cx(0.0, alpha));
  r.check("delta_1d.residue", res <= 1e-10, "|Res A - i alpha| = %.3e (tol 1e-10)", res);
  const double h = 1e-4;
  const double jump = jump_defect(
      alpha, [&](double x) { return Cx(psi0(well, x)); }, [&](double x) { return Cx(psi0(well, x)); }, h);
  r.check("delta_1d.jump_condition", jump <= alpha * h, "defect %.3e at h = %.0e (tol alpha h)", jump, h);
  std::vector<double> xs, ls;
  for (int i = 0; i <= 20; ++i) {
    xs.push_back(5.0 * i / 20 / alpha);
    ls.push_back(std::log(psi0(well, xs.back())));
  }
  const double slope = fit_line(xs, ls).slope;
  r.check("delta_1d.pole_decay", std::abs(slope + alpha) <= 1e-12 * alpha, "fitted slope %.15f vs -alpha", slope);
}

void specfun_checks(Report& r) {
  Draw u;
  double sym = 0.0;
  for (int i = 0; i < 200; ++i) {
    const Cx z(u(-6, 6), u(-6, 6));
    const Cx e = erf_cx(z);
    sym = std::max({sym, std::abs(erf_cx(-z) + e) / std::max(1.0, std::abs(e)),
                    std::abs(erf_cx(std::conj(z)) - std::conj(e)) / std::max(1.0, std::abs(e))});
  }
  r.check("specfun.erf_symmetry", sym <= 1e-14, "max odd/conjugation defect %.3e (tol 1e-14)", sym);
  const double e1 = std::abs(erf_cx(1.0) - 0.84270079294971487);
  r.check("specfun.erf_reference", e1 <= 1e-15, "|erf(1) - ref| = %.3e", e1);

  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double k = u(0.1, 10.0);
    const Cx xi(u(-10, 10), u(-1, 1));
    const FresnelValue a = fresnel_F(k, xi), b = fresnel_F_quadrature(k, xi, 1e-11);
    worst = std::max(worst, std::abs(a.value - b.value) / std::max(1.0, std::abs(a.value)));
  }
  r.check("specfun.fresnel_oracle", worst <= 1e-9, "max rel disagreement %.3e over 200 draws (tol 1e-9)", worst);

  const double k = 0.7;
  const Cx xi(0.8, 0.3);
  double res[3];
  const double hs[3] = {1e-2, 5e-3, 2.5e-3};
  for (int n = 0; n < 3; ++n) {
    const double h = hs[n];
    const Cx vp = fresnel_F(k, xi + h).value, v0 = fresnel_F(k, xi).value, vm = fresnel_F(k, xi - h).value;
    res[n] = std::abs((vp - 2.0 * v0 + vm) / (h * h) - 4.0 * I * k * xi * (vp - vm) / (2.0 * h));
  }
  const double ord = std::min(order(res[0], res[1]), order(res[1], res[2]));
  r.check("specfun.ode_identity", ord >= 1.8, "observed order %.3f (min 1.8)", ord);
}

void geometry_checks(Report& r) {
  Draw u;
  double relat = 0.0, trip = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const PlanePoint p{u(-5, 5), u(-5, 5), u(0, 2)};
    const ParabolicCoords c = to_parabolic(p);
    const double scale = std::max(1.0, c.r);
    relat = std::max({relat, std::abs(c.xi * c.xi - c.eta * c.eta - p.y) / scale,
                      std::abs(2.0 * c.xi * c.eta - (p.x - p.a)) / scale,
                      std::abs(std::pow(2.0 * c.xi * c.eta, 2) + std::pow(c.xi * c.xi - c.eta * c.eta, 2) - c.r * c.r) /
                          (scale * scale)});
    const PlanePoint q = from_parabolic(c.xi, c.eta, p.a);
    trip = std::max(trip, std::hypot(q.x - p.x, q.y - p.y) / scale);
  }
  r.check("geometry.mapping_relations", relat <= 1e-12, "max rel defect %.3e on 1000 points", relat);
  r.check("geometry.round_trip", trip <= 1e-12, "max rel defect %.3e on 1000 points", trip);

  double conj = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double rr = u(0.01, 10), lam = u(-3, 3);
    for (Side s : {Side::top, Side::bottom}) {
      const ParabolicCoords c = bound_parabolic({rr, 0.0, 0.0}, lam, s);
      conj = std::max(conj, std::abs(c.xi - std::conj(c.eta)) / std::sqrt(rr));
    }
  }
  r.check("geometry.conjugation_real_lambda", conj <= 1e-12, "max |xi - conj(eta)| / sqrt(r) = %.3e", conj);

  const WaveguideParams w = make_waveguide(1.0, 0.5, 1);
  double complex_gap = 0.0, analytic_gap = 0.0;
  for (Side s : {Side::top, Side::bottom}) {
    const ParabolicCoords c = bound_parabolic({2.0, 0.0, 0.0}, w.lambda, s);
    complex_gap = std::max(complex_gap, std::abs(c.xi - std::conj(c.eta)) / std::sqrt(2.0));
    analytic_gap = std::max(analytic_gap, std::abs(c.xi - conjugate_eta(c.r, c.phi, w.lambda)) / std::sqrt(2.0));
  }
  r.finding("geometry.conjugation_complex_lambda",
            "imaginary kappa: |xi - conj(eta)| / sqrt(r) = %.3e, |xi - eta*_analytic| / sqrt(r) = %.3e", complex_gap,
            analytic_gap);

  const PlanePoint p{0.3, 0.7, 0.0};
  const ParabolicCoords c0 = to_parabolic(p);
  const double d1 = std::abs(bound_parabolic(p, 1e-3).xi - c0.xi), d2 = std::abs(bound_parabolic(p, 5e-4).xi - c0.xi);
  r.check("geometry.lambda_continuity", std::abs(d1 / d2 - 2.0) < 0.05, "error ratio %.4f under lambda halving (O(lambda): 2)",
          d1 / d2);
}

void sommerfeld_checks(Report& r, double k) {
  const EdgeGeometry dir{0.5, BoundaryCondition::dirichlet};
  double on_ray = 0.0, scale = 0.0;
  for (int i = 1; i <= 1000; ++i) {
    const double x = dir.a + 10.0 * i / 1000;
    on_ray = std::max({on_ray, std::abs(edge_field(k, dir, {x, 0.0, dir.a}, 1.0, Side::top)),
                       std::abs(edge_field(k, dir, {x, 0.0, dir.a}, 1.0, Side::bottom))});
    scale = std::max(scale, std::abs(edge_field(k, dir, {x, 1.0, dir.a})));
  }
  r.check("sommerfeld.dirichlet_exact", on_ray <= 1e-12 * scale, "max|psi| on ray / max|psi| = %.3e (tol 1e-12)",
          on_ray / scale);

  const double nd = neumann_defect(k, {0.5, BoundaryCondition::neumann}, 10.0, 200, 1e-3);
  r.check("sommerfeld.neumann_derivative", nd <= 1e-8, "max|d psi/dy| / (k max|psi|) = %.3e (tol 1e-8)", nd);

  double l2[3];
  const int ns[3] = {101, 201, 401};
  ResidualOptions opt;
  opt.tip_radius = 0.5;
  for (int n = 0; n < 3; ++n)
    l2[n] = helmholtz_residual(field_on_grid(k, dir, square_grid(-2, 3, -2.5, 2.5, ns[n], ns[n])), k * k, opt).l2;
  const double ord = std::min(order(l2[0], l2[1]), order(l2[1], l2[2]));
  r.check("sommerfeld.residual_order", ord >= 1.8, "observed order %.3f (min 1.8)", ord);

  const FieldGrid serial = field_on_grid(k, dir, square_grid(-2, 2, -2, 2, 81, 81), 1.0, 1);
  const FieldGrid split = field_on_grid(k, dir, square_grid(-2, 2, -2, 2, 81, 81), 1.0, 4);
  r.check("sommerfeld.parallel_bit_identical", serial.values == split.values, "1 vs %g workers", 4.0);

  const GridSpec s = square_grid(-1, 1, -1, 1, 41, 41);
  FieldGrid wave = make_field_grid(s, false, 0.0, false);
  fill_grid(wave, [&](double, double y, int, int) { return std::exp(I * (k * y)); });
  const double symbol = std::abs(k * k - 4.0 * std::pow(std::sin(0.5 * k * s.dy), 2) / (s.dy * s.dy));
  const double got = helmholtz_residual(wave, k * k).max_abs;
  r.check("sommerfeld.plane_wave_symbol", std::abs(got - symbol) <= 1e-9 * k * k, "residual %.6e vs symbol %.6e", got,
          symbol);
}

void bound_edge_checks(Report& r, double alpha, double k) {
  const double k_trapped = 0.5 * alpha;
  double prod = 0.0;
  for (double kk : {k, k_trapped})
    for (int eps : {1, -1}) prod = std::max(prod, product_defect(make_waveguide(alpha, kk, eps)));
  r.check("bound_edge.defining_products", prod <= 1e-12, "max rel defect %.3e (tol 1e-12)", prod);
  const double flip = std::abs(kappa_lambda(alpha, k, -1).lambda + kappa_lambda(alpha, k, 1).lambda);
  r.check("bound_edge.eps_flip", flip <= 1e-14, "|lambda(-1) + lambda(+1)| = %.3e", flip);

  for (double kk : {k, k_trapped}) {
    BoundEdgeField f{alpha, kk};
    const RayDefect ra = ray_defect(f, 10.0 / alpha, 1000);
    f.conjugation = Conjugation::literal;
    const RayDefect rl = ray_defect(f, 10.0 / alpha, 1000);
    f.conjugation = Conjugation::analytic;
    char name[80];
    std::snprintf(name, sizeof name, "bound_edge.ray_defect[k=%g]", kk);
    r.finding(name, "max|psi| on ray / max|psi| = %.3e (analytic eta*), %.3e (literal conj)", ra.rel, rl.rel);
    std::snprintf(name, sizeof name, "bound_edge.delta_jump[k=%g]", kk);
    r.finding(name, "defect at y = -5/alpha, h = 1e-4: %.3e; x = 0 continuity defect %.3e",
              delta_jump_check(f, -5.0 / alpha, 1e-4), continuity_defect(f, -5.0 / alpha));

    double l2[3];
    const int ns[3] = {101, 201, 401};
    ResidualOptions opt;
    opt.tip_radius = 0.5 / alpha;
    for (int n = 0; n < 3; ++n)
      l2[n] = helmholtz_residual(bound_field_on_grid(f, square_grid(-2 / alpha, 2 / alpha, -2 / alpha, 2 / alpha, ns[n], ns[n])),
                                 kk * kk - alpha * alpha, opt)
                  .l2;
    const double ord = std::min(order(l2[0], l2[1]), order(l2[1], l2[2]));
    std::snprintf(name, sizeof name, "bound_edge.residual_order[k=%g]", kk);
    r.check(name, ord >= 1.8, "observed order %.3f away from ray and x = 0 (min 1.8)", ord);

    const TailFit t = tail_slope(f, 1.0 / alpha, -20.0 / alpha, -10.0 / alpha);
    std::snprintf(name, sizeof name, "bound_edge.tail_rigidity[k=%g]", kk);
    r.check(name, std::abs(t.slope / -alpha - 1.0) <= 0.01, "fitted d ln|psi|/d|x| = %.5f vs -alpha = %.5f (tol 1%%)",
            t.slope, -alpha);
  }

  const double tiny = 1e-6;
  double gap = 0.0;
  for (const PlanePoint& p : {PlanePoint{0.7, 1.3, 0}, PlanePoint{-1.1, 0.4, 0}, PlanePoint{0.5, -0.9, 0}}) {
    const Cx b = bound_edge_field({tiny, k}, p);
    const Cx s = edge_field(k, {0.0, BoundaryCondition::dirichlet}, p);
    gap = std::max(gap, std::abs(b - s) / std::abs(s));
  }
  r.check("bound_edge.small_alpha_limit", gap <= 1e-4, "max rel gap to the free edge field at alpha = 1e-6: %.3e", gap);
}

void green_checks(Report& r, double alpha) {
  const DeltaWell well(alpha);
  const auto norm = quad::adaptive<double>([&](double x) { return 2.0 * std::pow(bound_mode(well, x), 2); }, 0.0,
                                           40.0 / alpha, 1e-13);
  r.check("green.bound_mode_normalization", std::abs(norm.value - 1.0) <= 1e-10, "|int phi0^2 - 1| = %.3e",
          std::abs(norm.value - 1.0));

  ChannelGreen g{alpha, -0.75 * alpha * alpha};
  const PlanePoint p{0.4 / alpha, 0.9 / alpha, 0}, q{-0.7 / alpha, -0.2 / alpha, 0};
  const Cx gpq = green_eval(g, p, q).value, gqp = green_eval(g, q, p).value;
  r.check("green.symmetry", std::abs(gpq - gqp) <= 1e-10 * std::abs(gpq), "|G(p,q) - G(q,p)| / |G| = %.3e",
          std::abs(gpq - gqp) / std::abs(gpq));

  for (double E : {-0.75 * alpha * alpha, 3.0 * alpha * alpha}) {
    g.E = E;
    const double flux = green_flux_identity(g, {1.5 / alpha, 0.3 / alpha, 0}, 0.5 / alpha);
    char name[64];
    std::snprintf(name, sizeof name, "green.resolvent_identity[E=%g]", E);
    r.check(name, std::abs(flux - 1.0) <= 0.05, "box flux %.6f (exact 1, tol 5%%)", flux);
  }

  g.E = -0.75 * alpha * alpha;
  const PlanePoint far_from{0.3 / alpha, 0.0, 0}, far_to{-0.5 / alpha, 15.0 / alpha, 0};
  const Cx full = green_eval(g, far_from, far_to).value, bound = green_bound_channel(g, far_from, far_to);
  r.check("green.bound_channel_limit", std::abs(full - bound) <= 1e-4 * std::abs(bound),
          "|G - G_bound| / |G_bound| = %.3e at |dy| = 15/alpha", std::abs(full - bound) / std::abs(bound));

  for (double al : {0.5, 1.0, 2.0}) {
    std::vector<double> as;
    for (double m : {1.0, 1.5, 2.0, 2.5, 3.0}) as.push_back(m / al);
    const TailScanResult t = tail_scan(al, 0.5 * al, 1.0, as, {0.0, 20.0 / al, 0.0});
    char name[64];
    std::snprintf(name, sizeof name, "green.tail_slope[alpha=%g]", al);
    r.check(name, std::abs(t.slope / (-2.0 * al) - 1.0) <= 0.05, "slope %.6f vs -2 alpha = %.6f (tol 5%%)", t.slope,
            -2.0 * al);
  }
}

void oracle_checks(Report& r, double alpha, double k) {
  double prev = 0.0, rate = 0.0;
  for (double h : {0.1, 0.05, 0.025}) {
    const int n = static_cast<int>(std::lround(16.0 / h)) + 1;
    const double err = std::abs(transverse_mode(alpha, -8.0 / alpha, h / alpha, n).mu + alpha * alpha);
    if (prev > 0.0) rate = order(prev, err);
    prev = err;
  }
  r.check("oracle_fd.transverse_energy", prev <= 1e-3 * alpha * alpha, "|mu_h + alpha^2| = %.3e at h = 0.025/alpha",
          prev);
  r.finding("oracle_fd.transverse_energy_order", "observed order %.3f in h", rate);

  double mms[3];
  const int ns[3] = {41, 81, 161};
  for (int n = 0; n < 3; ++n) {
    FdProblem p;
    p.grid = square_grid(-1, 1, -1, 1, ns[n], ns[n]);
    p.has_edge = false;
    p.E = 2.0;
    auto ex = [](double x, double y) { return Cx(std::sin(2 * x) * std::cos(y), std::exp(x * y)); };
    p.boundary = [&](double x, double y, Side) { return ex(x, y); };
    p.source = [&](double x, double y) {
      return -Cx(-5 * std::sin(2 * x) * std::cos(y), (x * x + y * y) * std::exp(x * y)) - 2.0 * ex(x, y);
    };
    const FieldGrid g = solve(assemble(p), 1e-10);
    double err = 0.0;
    for (int j = 0; j < ns[n]; ++j)
      for (int i = 0; i < ns[n]; ++i) err = std::max(err, std::abs(g.values(i, j) - ex(p.grid.x(i), p.grid.y(j))));
    mms[n] = err;
  }
  const double mord = std::min(order(mms[0], mms[1]), order(mms[1], mms[2]));
  r.check("oracle_fd.manufactured_order", mord >= 1.8, "observed order %.3f (min 1.8)", mord);

  const GridSpec s = square_grid(-2, 2, -2, 2, 201, 201);
  for (BoundaryCondition bc : {BoundaryCondition::dirichlet, BoundaryCondition::neumann}) {
    const EdgeGeometry geom{0.0, bc};
    FdProblem p;
    p.grid = s;
    p.bc = bc;
    p.E = k * k;
    p.boundary = [&](double x, double y, Side side) { return edge_field(k, geom, {x, y, 0.0}, 1.0, side); };
    const CompareReport c = compare(field_on_grid(k, geom, s), solve(assemble(p), 1e-10));
    char name[64];
    std::snprintf(name, sizeof name, "oracle_fd.sommerfeld_%s", to_string(bc));
    r.check(name, c.l2_rel <= 0.02, "l2_rel %.3e, max_rel %.3e (tol l2 2%%)", c.l2_rel, c.max_rel);
  }

  const BoundEdgeField f{alpha, 0.5 * alpha};
  const GridSpec sb = square_grid(-2 / alpha, 2 / alpha, -2 / alpha, 2 / alpha, 201, 201);
  FdProblem p;
  p.grid = sb;
  p.alpha = alpha;
  p.E = f.k * f.k - alpha * alpha;
  p.boundary = [&](double x, double y, Side side) { return bound_edge_field(f, {x, y, 0.0}, side); };
  const CompareReport c = compare(bound_field_on_grid(f, sb), solve(assemble(p), 1e-10));
  r.check("oracle_fd.bound_edge", c.l2_rel <= 0.05, "l2_rel %.3e, max_rel %.3e (tol l2 5%%)", c.l2_rel, c.max_rel);

  std::vector<double> as;
  for (double m : {1.0, 1.5, 2.0, 2.5, 3.0}) as.push_back(m / alpha);
  const TailScanResult t = fd_tail_scan(alpha, 0.5 * alpha, as);
  r.check("oracle_fd.tail_slope", std::abs(t.slope / (-2.0 * alpha) - 1.0) <= 0.15,
          "slope %.5f vs -2 alpha = %.5f (tol 15%%)", t.slope, -2.0 * alpha);
}

}  // namespace

bool run_verify(const RunConfig& cfg, std::ostream& out) {
  const double alpha = cfg.alpha, k = cfg.k.value_or(2.0);
  if (k == alpha || k == 0.5 * alpha) throw UsageError("verify needs k different from alpha and alpha/2");
  Report r(out);
  char head[120];
  std::snprintf(head, sizeof head, "verify alpha=%g k=%g\n", alpha, k);
  out << head;
  delta_checks(r, alpha);
  specfun_checks(r);
  geometry_checks(r);
  sommerfeld_checks(r, k);
  bound_edge_checks(r, alpha, k);
  green_checks(r, alpha);
  oracle_checks(r, alpha, k);
  out << (r.all() ? "ALL PASS" : "SOME CHECKS FAILED") << '\n';
  return r.all();
}

}  // namespace edgewave::cli
