#include "edgewave/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "edgewave/bound_edge.hpp"
#include "edgewave/green.hpp"
#include "edgewave/oracle_fd.hpp"
#include "edgewave/sommerfeld.hpp"

namespace edgewave::cli {

namespace {

double to_number(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + s + "'");
  }
  if (used != s.size()) throw UsageError("not a number: '" + s + "'");
  return v;
}

Cx parse_complex(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) return to_number(s);
  return {to_number(s.substr(0, comma)), to_number(s.substr(comma + 1))};
}

// Opens `path` for writing, or hands back `fallback` for "-".
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (path.empty() || path == "-") return;
    file_.open(path);
    if (!file_) throw UsageError("cannot open " + path + " for writing");
    os_ = &file_;
  }
  std::ostream& get() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

GridSpec grid_of(const RunConfig& c) {
  GridSpec s{c.x0, c.y0, c.dx, c.dy, c.nx, c.ny};
  try {
    s.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return s;
}

double single_a(const RunConfig& c) {
  const std::vector<double> v = parse_positions(c.a.value_or("0"));
  if (v.size() != 1) throw UsageError("--a must be a single tip abscissa for this command");
  if (v[0] < 0.0) throw UsageError("--a must be >= 0");
  return v[0];
}

double k_of(const RunConfig& c) { return c.k.value_or(2.0); }

BoundEdgeField bound_of(const RunConfig& c) {
  if (single_a(c) != 0.0) throw UsageError("bound mode has its tip at the origin; --a must be 0");
  return {c.alpha, k_of(c), c.C0, c.literal_conjugation ? Conjugation::literal : Conjugation::analytic};
}

FieldGrid sample_field(const RunConfig& c) {
  const GridSpec s = grid_of(c);
  if (c.mode == Mode::bound) return bound_field_on_grid(bound_of(c), s, c.threads);
  return field_on_grid(k_of(c), {single_a(c), c.bc}, s, c.C0, c.threads);
}

void validate(const RunConfig& c) {
  if (!(c.alpha > 0.0)) throw UsageError("--alpha must be positive");
  if (c.k && !(*c.k > 0.0)) throw UsageError("--k must be positive");
  if (!(c.tol >= 1e-12 && c.tol <= 1e-6)) throw UsageError("--tol must lie in [1e-12, 1e-6]");
  if (c.tip_radius < 0.0) throw UsageError("--tip-radius must be >= 0");
  if (c.threads < 0) throw UsageError("--threads must be >= 0");
  if (c.mode == Mode::bound && c.k && *c.k == c.alpha) throw UsageError("bound mode needs k != alpha");
}

int cmd_field(const RunConfig& c, std::ostream& out) {
  const FieldGrid g = sample_field(c);
  Sink sink(c.output, out);
  write_csv(sink.get(), g);
  return exit_pass;
}

int cmd_residual(const RunConfig& c, std::ostream& out) {
  const FieldGrid g = sample_field(c);
  const double k = k_of(c);
  const double k2 = c.mode == Mode::bound ? k * k - c.alpha * c.alpha : k * k;
  ResidualOptions opt;
  opt.tip_radius = c.tip_radius;
  const ResidualReport r = helmholtz_residual(g, k2, opt);
  Sink sink(c.output, out);
  std::ostream& os = sink.get();
  os << "mode " << (c.mode == Mode::bound ? "bound" : "sommerfeld") << '\n';
  os << "k2 " << format_double(k2) << '\n';
  os << "nodes " << r.nodes << '\n';
  os << "max_abs " << format_double(r.max_abs) << '\n';
  os << "l2 " << format_double(r.l2) << '\n';
  os << "coarse " << (r.coarse ? "true" : "false") << '\n';
  return exit_pass;
}

void write_summary(const RunConfig& c, std::ostream& out, const std::string& record) {
  if (c.summary.empty()) {
    out << record << '\n';
    return;
  }
  Sink sink(c.summary, out);
  sink.get() << record << '\n';
}

int cmd_tail(const RunConfig& c, std::ostream& out) {
  std::vector<double> as;
  if (c.a) {
    as = parse_positions(*c.a);
  } else {
    for (double m : {1.0, 1.5, 2.0, 2.5, 3.0}) as.push_back(m / c.alpha);
  }
  // The law concerns the trapped regime E < 0, so k defaults below alpha.
  const double k = c.k.value_or(0.5 * c.alpha);
  TailScanResult r;
  try {
    if (c.method == TailMethod::fd) {
      r = fd_tail_scan(c.alpha, k, as);
    } else {
      ChannelGreen opts;
      opts.p_max = c.p_max;
      const PlanePoint probe{c.probe_x, c.probe_y.value_or(20.0 / c.alpha), 0.0};
      r = tail_scan(c.alpha, k, c.lambda_imp, as, probe, &opts);
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Sink sink(c.output, out);
  sink.get() << "a,amplitude\n";
  for (std::size_t i = 0; i < r.a.size(); ++i)
    sink.get() << format_double(r.a[i]) << ',' << format_double(r.amplitude[i]) << '\n';
  std::ostringstream rec;
  rec << "{\"slope\": " << format_double(r.slope) << ", \"residual\": " << format_double(r.residual)
      << ", \"alpha\": " << format_double(r.alpha) << ", \"k\": " << format_double(r.k) << "}";
  write_summary(c, out, rec.str());
  const double band = c.method == TailMethod::fd ? 0.15 : 0.05;
  return std::abs(r.slope / (-2.0 * c.alpha) - 1.0) <= band ? exit_pass : exit_failure;
}

int cmd_oracle(const RunConfig& c, std::ostream& out) {
  const GridSpec s = grid_of(c);
  const FieldGrid exact = sample_field(c);
  FdProblem p;
  p.grid = s;
  p.has_edge = true;
  double limit = 0.02;
  if (c.mode == Mode::bound) {
    const BoundEdgeField f = bound_of(c);
    p.alpha = c.alpha;
    p.a = 0.0;
    p.E = f.k * f.k - f.alpha * f.alpha;
    p.boundary = [f](double x, double y, Side side) { return bound_edge_field(f, {x, y, 0.0}, side); };
    limit = 0.05;
  } else {
    const double k = k_of(c);
    const EdgeGeometry geom{single_a(c), c.bc};
    p.a = geom.a;
    p.bc = geom.bc;
    p.E = k * k;
    p.boundary = [k, geom, C0 = c.C0](double x, double y, Side side) {
      return edge_field(k, geom, {x, y, geom.a}, C0, side);
    };
  }
  SparseSystem sys;
  try {
    sys = assemble(p);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const FieldGrid fd = solve(sys, c.tol);
  const CompareReport rep = compare(exact, fd);
  if (!c.output.empty() && c.output != "-") write_csv(c.output, fd);

  char line[160];
  out << "region          nodes        l2_rel                   max_rel\n";
  for (const RegionError& r : rep.regions) {
    std::snprintf(line, sizeof line, "%-14s %6ld  %s  %s\n", r.name.c_str(), r.nodes, format_double(r.l2_rel).c_str(),
                  format_double(r.max_rel).c_str());
    out << line;
  }
  std::snprintf(line, sizeof line, "%-14s %6ld  %s  %s\n", "all", rep.nodes, format_double(rep.l2_rel).c_str(),
                format_double(rep.max_rel).c_str());
  out << line;
  std::ostringstream rec;
  rec << "{\"l2_rel\": " << format_double(rep.l2_rel) << ", \"max_rel\": " << format_double(rep.max_rel)
      << ", \"dx\": " << format_double(s.dx) << ", \"dy\": " << format_double(s.dy)
      << ", \"E\": " << format_double(p.E) << "}";
  write_summary(c, out, rec.str());
  return rep.l2_rel <= limit ? exit_pass : exit_failure;
}

}  // namespace

std::vector<double> parse_positions(const std::string& text) {
  std::vector<double> v;
  const auto c1 = text.find(':');
  if (c1 != std::string::npos) {
    const auto c2 = text.find(':', c1 + 1);
    if (c2 == std::string::npos) throw UsageError("range must read lo:step:hi");
    const double lo = to_number(text.substr(0, c1)), step = to_number(text.substr(c1 + 1, c2 - c1 - 1)),
                 hi = to_number(text.substr(c2 + 1));
    if (!(step > 0.0) || hi < lo) throw UsageError("range needs step > 0 and hi >= lo");
    const long n = std::lround(std::floor((hi - lo) / step + 1e-9));
    if (n > 100000) throw UsageError("range has too many points");
    for (long i = 0; i <= n; ++i) v.push_back(lo + i * step);
    return v;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(to_number(item));
  if (v.empty()) throw UsageError("empty position list");
  return v;
}

RunConfig parse(int argc, const char* const* argv) {
  RunConfig c;
  CLI::App app{"Edge diffraction and guided-wave fields"};
  app.set_config("--config", "", "key=value file; flags override it");
  app.allow_config_extras(CLI::config_extras_mode::error);

  const std::map<std::string, Command> commands{{"field", Command::field},
                                                {"residual", Command::residual},
                                                {"verify", Command::verify},
                                                {"tail", Command::tail},
                                                {"oracle", Command::oracle}};
  app.add_option("command", c.command, "field | residual | verify | tail | oracle")
      ->transform(CLI::CheckedTransformer(commands, CLI::ignore_case))
      ->required();
  app.add_option("--mode", c.mode, "sommerfeld | bound")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Mode>{{"sommerfeld", Mode::sommerfeld},
                                                                      {"bound", Mode::bound}}));
  app.add_option("--method", c.method, "tail scan path: green | fd")
      ->transform(CLI::CheckedTransformer(std::map<std::string, TailMethod>{{"green", TailMethod::green},
                                                                            {"fd", TailMethod::fd}}));
  app.add_option("--alpha", c.alpha, "transverse decay rate");
  app.add_option("--k", c.k, "longitudinal wavenumber (tail default alpha/2, otherwise 2)");
  app.add_option("--a", c.a, "edge tip abscissa; for tail lo:step:hi or a list (default 1:0.5:3 over alpha)");
  app.add_option("--bc", c.bc, "dirichlet | neumann")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, BoundaryCondition>{{"dirichlet", BoundaryCondition::dirichlet},
                                                   {"neumann", BoundaryCondition::neumann}}));
  std::string c0 = "1";
  app.add_option("--C0", c0, "amplitude: re or re,im");
  app.add_flag("--literal-conjugation", c.literal_conjugation, "bound mode: eta* as the plain complex conjugate");
  app.add_option("--x0", c.x0);
  app.add_option("--y0", c.y0);
  app.add_option("--dx", c.dx);
  app.add_option("--dy", c.dy);
  app.add_option("--nx", c.nx);
  app.add_option("--ny", c.ny);
  app.add_option("--output", c.output, "artifact path, - for stdout");
  app.add_option("--summary", c.summary, "summary record path (default stdout)");
  app.add_option("--tol", c.tol, "sparse solve tolerance");
  app.add_option("--tip-radius", c.tip_radius, "residual: skip nodes this close to the tip");
  app.add_option("--lambda-imp", c.lambda_imp, "impurity strength");
  app.add_option("--probe-x", c.probe_x);
  app.add_option("--probe-y", c.probe_y, "default 20/alpha");
  app.add_option("--p-max", c.p_max, "continuum cutoff (default 20 alpha)");
  app.add_option("--threads", c.threads, "grid workers, 0 = hardware");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  c.C0 = parse_complex(c0);
  validate(c);
  return c;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    validate(cfg);
    switch (cfg.command) {
      case Command::field:
        return cmd_field(cfg, out);
      case Command::residual:
        return cmd_residual(cfg, out);
      case Command::verify:
        return run_verify(cfg, out) ? exit_pass : exit_failure;
      case Command::tail:
        return cmd_tail(cfg, out);
      case Command::oracle:
        return cmd_oracle(cfg, out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << " (achieved " << e.achieved() << ")\n";
    return exit_failure;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return exit_failure;
  }
  return exit_failure;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg = parse(argc, argv);
  } catch (const HelpRequested& h) {
    out << h.text;
    return exit_pass;
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return exit_usage;
  }
  return run(cfg, out, err);
}

}  // namespace edgewave::cli
