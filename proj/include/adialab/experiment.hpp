#pragma once

#include <array>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "adialab/torus.hpp"

namespace adialab::experiment {

enum class Geometry { torus, heisenberg, sol, weyl_ref, suite };
enum class Mode { counting, heat, symbol, compare, mismatch };
enum class Potential { flat, cosine };

/// A malformed or inconsistent configuration. The message names the field.
class ConfigError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

std::string_view to_string(Geometry g);
std::string_view to_string(Mode m);
std::string_view to_string(Potential p);
Geometry parse_geometry(std::string_view s);
Mode parse_mode(std::string_view s);

/// Whether `mode` is implemented for `geometry`.
bool is_compatible(Geometry geometry, Mode mode);

/// Fully resolved experiment description: every default is filled in by
/// resolve(), so the echo of a config reproduces the run.
struct ExperimentConfig {
  Geometry geometry = Geometry::torus;
  Mode mode = Mode::compare;
  double alpha = 0.0;
  std::string alpha_label;  ///< "sqrt2", "golden" or empty for a plain number
  std::optional<torus::RationalSlope> rational;
  double a = 1.0;
  double mu = 1.0;
  std::array<long, 4> matrix{2, 1, 1, 1};
  int q_codim = 1;
  std::vector<double> eps;
  std::vector<double> t;
  std::vector<double> lambda;
  double tol = 0.0;
  Potential potential = Potential::flat;
  std::string out_csv;
  std::string out_json;
  std::string report;
};

/// Parses a JSON document whose keys mirror the command-line flags
/// (geometry, mode, alpha, rational, a, mu, matrix, q_codim, eps, t, lambda,
/// tol, potential, out_csv, out_json, report). Unknown keys are errors.
ExperimentConfig parse_config_text(const std::string& json_text);

/// Command-line front end: `<geometry> [--flags]`, optionally with
/// `--config PATH`; flags override values from the file. Returns nullopt
/// after printing help to `out`.
std::optional<ExperimentConfig> parse_command_line(const std::vector<std::string>& args, std::ostream& out);

/// JSON rendering of a resolved config (the config_echo block).
std::string config_echo(const ExperimentConfig& config);

enum class CheckKind {
  relative,    ///< pass iff |ratio - 1| <= tolerance
  upper_bound  ///< pass iff ratio < bound
};

struct CheckResult {
  std::string name;
  Geometry geometry = Geometry::torus;
  Mode mode = Mode::compare;
  double alpha = 0.0;
  std::optional<torus::RationalSlope> rational;
  double eps = 0.0;     ///< NaN when not applicable
  double t = 0.0;       ///< NaN when not applicable
  double lambda = 0.0;  ///< NaN when not applicable
  double observed = 0.0;
  double predicted = 0.0;
  double ratio = 0.0;
  double tolerance = 0.0;
  CheckKind kind = CheckKind::relative;
  double bound = 0.0;
  bool pass = false;
  std::string provenance;
};

struct FitRecord {
  std::string name;
  double coefficient;
  double exponent;
  double residual;
};

struct RunResult {
  std::vector<CheckResult> checks;
  std::vector<FitRecord> fits;
  std::vector<std::string> config_echoes;
  bool convergence_failure = false;
  std::vector<std::string> failures;  ///< "operation: message" for each failed computation
};

/// Executes one configuration. Numerical failures inside a cell are recorded
/// as failing checks and flagged in convergence_failure; the remaining cells
/// still run.
RunResult run_experiment(const ExperimentConfig& config);

/// Configurations making up the default reproduction suite.
std::vector<ExperimentConfig> default_suite();

/// Runs every configuration of default_suite() in order.
RunResult run_suite();

/// 0 all pass, 1 a check failed, 3 a computation failed to converge.
int exit_code(const RunResult& result);

std::string render_csv(const RunResult& result);
std::string render_json(const RunResult& result);
std::string render_report(const RunResult& result);
std::string verdict_line(const RunResult& result);

/// Writes whichever outputs the config names.
void write_outputs(const ExperimentConfig& config, const RunResult& result);

/// printf("%.17g")
std::string format_double(double x);

}  // namespace adialab::experiment
