#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "edgewave/types.hpp"

namespace edgewave::cli {

/// Bad or missing configuration; maps to exit status 2.
class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// `--help` was given; `text` is the usage message.
struct HelpRequested {
  std::string text;
};

enum class Command { field, residual, verify, tail, oracle };
enum class Mode { sommerfeld, bound };
enum class TailMethod { green, fd };

struct RunConfig {
  Command command = Command::verify;
  Mode mode = Mode::sommerfeld;
  TailMethod method = TailMethod::green;

  double alpha = 1.0;
  std::optional<double> k;
  std::optional<std::string> a;  // tip abscissa (default 0); for `tail` lo:step:hi or a list
  BoundaryCondition bc = BoundaryCondition::dirichlet;
  Cx C0 = 1.0;
  bool literal_conjugation = false;

  double x0 = -2.0, y0 = -2.0, dx = 0.02, dy = 0.02;
  int nx = 201, ny = 201;

  std::string output = "-";
  std::string summary;
  double tol = 1e-10;
  double tip_radius = 0.0;
  double lambda_imp = 1.0;
  double probe_x = 0.0;
  std::optional<double> probe_y;
  double p_max = 0.0;
  int threads = 0;
};

inline constexpr int exit_pass = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

/// Flags (`--key=value`) and an optional `--config=file` of key=value lines;
/// flags win over the file. Throws UsageError or HelpRequested.
RunConfig parse(int argc, const char* const* argv);

/// Positions given as `lo:step:hi` (inclusive) or `a1,a2,...`.
std::vector<double> parse_positions(const std::string& text);

/// Runs the command. Artifacts go to the configured paths ("-" is `out`),
/// reports to `out`, diagnostics to `err`. Returns the exit status.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// parse + run with the exit-status mapping.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// The invariant suite behind `verify`. Prints one PASS/FAIL line per check
/// and FINDING lines for measured quantities without a threshold. Returns
/// true when every check passes.
bool run_verify(const RunConfig& cfg, std::ostream& out);

}  // namespace edgewave::cli
