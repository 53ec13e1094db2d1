#include <cmath>
#include <fstream>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "adialab/errors.hpp"
#include "adialab/experiment.hpp"
#include "adialab/sol.hpp"

namespace adialab::experiment {

using nlohmann::json;

namespace {

const std::set<std::string> kKeys{"geometry", "mode", "alpha", "rational", "a",         "mu",
                                  "matrix",   "q_codim", "eps", "t",      "lambda",    "tol",
                                  "potential", "out_csv", "out_json", "report"};

struct Defaults {
  std::vector<double> eps, t, lambda;
  double tol;
  bool needs_eps, needs_t, needs_lambda;
};

Defaults defaults_for(Geometry g, Mode m, bool rational) {
  const std::vector<double> heis_t{0.1, 0.5, 1.0, 2.0, 5.0};
  const std::vector<double> sol_t{0.5, 1.0, 2.0};
  switch (g) {
    case Geometry::torus:
      switch (m) {
        case Mode::counting:
          return rational ? Defaults{{0.01}, {}, {10.0}, 0.05, true, false, true}
                          : Defaults{{0.01}, {}, {1e4}, 0.03, true, false, true};
        case Mode::heat:
        case Mode::compare: return {{0.04, 0.02, 0.01}, {1.0}, {}, 0.03, true, true, false};
        case Mode::symbol: return {{}, {0.5, 1.0, 2.0}, {}, 1e-10, false, true, false};
        default: break;
      }
      break;
    case Geometry::heisenberg:
      switch (m) {
        case Mode::symbol: return {{}, heis_t, {}, 1e-8, false, true, false};
        case Mode::heat: return {{0.1}, heis_t, {}, 1e-10, true, true, false};
        case Mode::compare: return {{0.1}, heis_t, {}, 1e-7, true, true, false};
        default: break;
      }
      break;
    case Geometry::sol:
      switch (m) {
        case Mode::counting: return {{0.01}, {}, {5.0}, 0.03, true, false, true};
        case Mode::symbol: return {{}, sol_t, {}, 1e-12, false, true, false};
        case Mode::compare: return {{0.1}, sol_t, {}, 1e-12, true, true, false};
        case Mode::mismatch: return {{0.1}, sol_t, {}, 0.01, true, true, false};
        default: break;
      }
      break;
    case Geometry::weyl_ref:
      switch (m) {
        case Mode::counting: return {{0.01}, {}, {1.0}, 0.04, true, false, true};
        case Mode::heat: return {{0.01}, {1.0}, {}, 0.02, true, true, false};
        case Mode::compare: return {{}, {}, {10.0}, 1e-12, false, false, true};
        default: break;
      }
      break;
    case Geometry::suite: return {{}, {}, {}, 0.0, false, false, false};
  }
  throw ConfigError("mode: '" + std::string(to_string(m)) + "' is not available for geometry '" +
                    std::string(to_string(g)) + "'");
}

std::vector<double> number_list(const json& v, const std::string& key) {
  std::vector<double> out;
  if (v.is_number()) {
    out.push_back(v.get<double>());
  } else if (v.is_array()) {
    for (const auto& x : v) {
      if (!x.is_number()) throw ConfigError(key + ": expected a number or a list of numbers");
      out.push_back(x.get<double>());
    }
  } else {
    throw ConfigError(key + ": expected a number or a list of numbers");
  }
  return out;
}

double number(const json& v, const std::string& key) {
  if (!v.is_number()) throw ConfigError(key + ": expected a number");
  return v.get<double>();
}

std::string text(const json& v, const std::string& key) {
  if (!v.is_string()) throw ConfigError(key + ": expected a string");
  return v.get<std::string>();
}

torus::RationalSlope parse_rational(const json& v) {
  long p = 0, q = 0;
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    const auto slash = s.find('/');
    if (slash == std::string::npos) throw ConfigError("rational: expected p/q, got '" + s + "'");
    try {
      std::size_t used_p = 0, used_q = 0;
      p = std::stol(s.substr(0, slash), &used_p);
      q = std::stol(s.substr(slash + 1), &used_q);
      if (used_p != slash || used_q != s.size() - slash - 1) throw std::invalid_argument(s);
    } catch (const std::logic_error&) {
      throw ConfigError("rational: expected p/q with integers p, q, got '" + s + "'");
    }
  } else if (v.is_array() && v.size() == 2 && v[0].is_number_integer() && v[1].is_number_integer()) {
    p = v[0].get<long>();
    q = v[1].get<long>();
  } else {
    throw ConfigError("rational: expected \"p/q\" or [p, q]");
  }
  if (q < 1) throw ConfigError("rational: denominator must be at least 1");
  if (std::gcd(std::abs(p), q) != 1) throw ConfigError("rational: p and q must be coprime");
  return {p, q};
}

void require_positive(const std::vector<double>& xs, const std::string& key) {
  for (double x : xs)
    if (!(x > 0.0) || !std::isfinite(x)) throw ConfigError(key + " must be positive");
}

int codimension(Geometry g) {
  return g == Geometry::heisenberg || g == Geometry::sol ? 2 : 1;
}

ExperimentConfig resolve(const json& doc) {
  if (!doc.is_object()) throw ConfigError("config: expected a JSON object");
  for (const auto& [key, value] : doc.items())
    if (!kKeys.contains(key)) throw ConfigError("unknown key '" + key + "'");

  // Field-level checks come before cross-field ones so the message names the bad field.
  if (doc.contains("eps")) require_positive(number_list(doc["eps"], "eps"), "eps");
  if (doc.contains("t")) require_positive(number_list(doc["t"], "t"), "t");

  ExperimentConfig c;
  if (!doc.contains("geometry")) throw ConfigError("geometry: missing");
  c.geometry = parse_geometry(text(doc["geometry"], "geometry"));
  if (doc.contains("mode")) c.mode = parse_mode(text(doc["mode"], "mode"));
  if (!is_compatible(c.geometry, c.mode))
    throw ConfigError("mode: '" + std::string(to_string(c.mode)) + "' is not available for geometry '" +
                      std::string(to_string(c.geometry)) + "'");

  if (doc.contains("rational")) {
    if (c.geometry != Geometry::torus) throw ConfigError("rational: only the torus geometry has a rational slope");
    c.rational = parse_rational(doc["rational"]);
    c.alpha = static_cast<double>(c.rational->p) / static_cast<double>(c.rational->q);
  }
  if (doc.contains("alpha")) {
    const auto& v = doc["alpha"];
    double value = 0.0;
    std::string label;
    if (v.is_string()) {
      label = v.get<std::string>();
      if (label == "sqrt2") value = std::numbers::sqrt2;
      else if (label == "golden") value = std::numbers::phi;
      else throw ConfigError("alpha: expected a number, \"sqrt2\" or \"golden\"");
    } else {
      value = number(v, "alpha");
      if (!std::isfinite(value)) throw ConfigError("alpha must be finite");
    }
    if (c.rational && (!label.empty() || value != c.alpha))
      throw ConfigError("alpha: does not equal the rational slope " + std::to_string(c.rational->p) + "/" +
                        std::to_string(c.rational->q));
    c.alpha = value;
    c.alpha_label = label;
  } else if (!c.rational) {
    if (c.geometry == Geometry::torus) {
      c.alpha = std::numbers::sqrt2;
      c.alpha_label = "sqrt2";
    } else if (c.geometry == Geometry::sol) {
      c.alpha = c.mode == Mode::compare ? 0.0 : 1.0;
    }
  }

  if (c.geometry == Geometry::torus && c.rational && c.mode != Mode::counting)
    throw ConfigError("rational: only counting mode has a rational-slope law");
  if (c.geometry == Geometry::sol && c.mode == Mode::mismatch && c.alpha == 0.0)
    throw ConfigError("alpha: mismatch mode requires alpha != 0");
  if (c.geometry == Geometry::sol && c.mode == Mode::compare && c.alpha != 0.0)
    throw ConfigError("alpha: sol compare mode requires alpha = 0 (use --mode mismatch for alpha != 0)");

  if (doc.contains("a")) c.a = number(doc["a"], "a");
  if (doc.contains("mu")) c.mu = number(doc["mu"], "mu");
  if (!(c.a > 0.0) || !std::isfinite(c.a)) throw ConfigError("a must be positive");
  if (!(c.mu > 0.0) || !std::isfinite(c.mu)) throw ConfigError("mu must be positive");

  if (doc.contains("matrix")) {
    const auto& v = doc["matrix"];
    if (!v.is_array() || v.size() != 4) throw ConfigError("matrix: expected four integers a11,a12,a21,a22");
    for (std::size_t i = 0; i < 4; ++i) {
      if (!v[i].is_number_integer()) throw ConfigError("matrix: expected four integers a11,a12,a21,a22");
      c.matrix[i] = v[i].get<long>();
    }
  }
  if (c.geometry == Geometry::sol) {
    try {
      sol::sol_matrix_validate({{{c.matrix[0], c.matrix[1]}, {c.matrix[2], c.matrix[3]}}});
    } catch (const ValidationError& e) {
      throw ConfigError(std::string("matrix: ") + e.what());
    }
  }

  c.q_codim = codimension(c.geometry);
  if (doc.contains("q_codim")) {
    const auto& v = doc["q_codim"];
    if (!v.is_number_integer()) throw ConfigError("q_codim: expected an integer");
    if (v.get<int>() != c.q_codim)
      throw ConfigError("q_codim: geometry '" + std::string(to_string(c.geometry)) + "' has codimension " +
                        std::to_string(c.q_codim));
  }

  const auto d = defaults_for(c.geometry, c.mode, c.rational.has_value());
  c.eps = doc.contains("eps") ? number_list(doc["eps"], "eps") : d.eps;
  c.t = doc.contains("t") ? number_list(doc["t"], "t") : d.t;
  c.lambda = doc.contains("lambda") ? number_list(doc["lambda"], "lambda") : d.lambda;
  require_positive(c.eps, "eps");
  require_positive(c.t, "t");
  for (double x : c.lambda)
    if (!std::isfinite(x)) throw ConfigError("lambda must be finite");
  if (d.needs_eps && c.eps.empty()) throw ConfigError("eps: must not be empty for this mode");
  if (d.needs_t && c.t.empty()) throw ConfigError("t: must not be empty for this mode");
  if (d.needs_lambda && c.lambda.empty()) throw ConfigError("lambda: must not be empty for this mode");

  c.tol = d.tol;
  if (doc.contains("tol")) {
    c.tol = number(doc["tol"], "tol");
    if (!(c.tol > 0.0) || !std::isfinite(c.tol)) throw ConfigError("tol must be positive");
  }

  if (doc.contains("potential")) {
    const auto p = text(doc["potential"], "potential");
    if (p == "flat") c.potential = Potential::flat;
    else if (p == "cos") c.potential = Potential::cosine;
    else throw ConfigError("potential: expected 'flat' or 'cos'");
  }
  if (doc.contains("out_csv")) c.out_csv = text(doc["out_csv"], "out_csv");
  if (doc.contains("out_json")) c.out_json = text(doc["out_json"], "out_json");
  if (doc.contains("report")) c.report = text(doc["report"], "report");
  return c;
}

json parse_json_text(const std::string& s, const std::string& origin) {
  try {
    return json::parse(s);
  } catch (const json::parse_error& e) {
    throw ConfigError("config: " + origin + " is not valid JSON: " + e.what());
  }
}

}  // namespace

std::string_view to_string(Geometry g) {
  switch (g) {
    case Geometry::torus: return "torus";
    case Geometry::heisenberg: return "heisenberg";
    case Geometry::sol: return "sol";
    case Geometry::weyl_ref: return "weyl-ref";
    case Geometry::suite: return "suite";
  }
  return "?";
}

std::string_view to_string(Mode m) {
  switch (m) {
    case Mode::counting: return "counting";
    case Mode::heat: return "heat";
    case Mode::symbol: return "symbol";
    case Mode::compare: return "compare";
    case Mode::mismatch: return "mismatch";
  }
  return "?";
}

std::string_view to_string(Potential p) { return p == Potential::flat ? "flat" : "cos"; }

Geometry parse_geometry(std::string_view s) {
  for (auto g : {Geometry::torus, Geometry::heisenberg, Geometry::sol, Geometry::weyl_ref, Geometry::suite})
    if (s == to_string(g)) return g;
  throw ConfigError("geometry: unknown value '" + std::string(s) + "' (torus, heisenberg, sol, weyl-ref, suite)");
}

Mode parse_mode(std::string_view s) {
  for (auto m : {Mode::counting, Mode::heat, Mode::symbol, Mode::compare, Mode::mismatch})
    if (s == to_string(m)) return m;
  throw ConfigError("mode: unknown value '" + std::string(s) + "' (counting, heat, symbol, compare, mismatch)");
}

bool is_compatible(Geometry geometry, Mode mode) {
  switch (geometry) {
    case Geometry::torus: return mode != Mode::mismatch;
    case Geometry::heisenberg: return mode == Mode::symbol || mode == Mode::heat || mode == Mode::compare;
    case Geometry::sol: return mode != Mode::heat;
    case Geometry::weyl_ref: return mode == Mode::counting || mode == Mode::heat || mode == Mode::compare;
    case Geometry::suite: return mode == Mode::compare;
  }
  return false;
}

ExperimentConfig parse_config_text(const std::string& json_text) {
  return resolve(parse_json_text(json_text, "document"));
}

std::optional<ExperimentConfig> parse_command_line(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Adiabatic-limit spectral experiments on foliated 3-manifolds and their references.", "adialab"};
  app.set_help_flag("-h,--help", "Print this help and exit");

  std::string geometry, mode, rational, potential, config_path, out_csv, out_json, report;
  double alpha = 0.0, a = 1.0, mu = 1.0, tol = 0.0;
  int q_codim = 0;
  bool sqrt2 = false, golden = false;
  std::vector<double> eps, t, lambda;
  std::vector<long> matrix;

  app.add_option("geometry", geometry, "torus | heisenberg | sol | weyl-ref | suite");
  app.add_option("--config", config_path, "JSON config file; flags override its values");
  app.add_option("--mode", mode,
                 "counting | heat | symbol | compare | mismatch (default compare).\n"
                 "torus: counting heat symbol compare; heisenberg: symbol heat compare;\n"
                 "sol: counting symbol compare mismatch; weyl-ref: counting heat compare");
  auto* alpha_opt = app.add_option("--alpha", alpha,
                                   "Foliation slope (default: sqrt2 for torus; 0 for sol compare, 1 otherwise)");
  auto* sqrt2_opt = app.add_flag("--alpha-sqrt2", sqrt2, "Declare alpha = sqrt(2) (irrational branch)");
  auto* golden_opt = app.add_flag("--alpha-golden", golden, "Declare alpha = (1 + sqrt 5) / 2 (irrational branch)");
  alpha_opt->excludes(sqrt2_opt)->excludes(golden_opt);
  sqrt2_opt->excludes(golden_opt);
  app.add_option("--rational", rational, "Torus slope p/q with coprime p, q >= 1 (rational branch)");
  app.add_option("--eps", eps, "Adiabatic parameters, comma separated (h for weyl-ref counting)")->delimiter(',');
  app.add_option("--t", t, "Heat times, comma separated")->delimiter(',');
  app.add_option("--lambda", lambda, "Spectral thresholds, comma separated")->delimiter(',');
  app.add_option("--a", a, "Mathieu amplitude (default 1)");
  app.add_option("--mu", mu, "Mathieu rate (default 1)");
  app.add_option("--matrix", matrix, "Sol matrix a11,a12,a21,a22 (default 2,1,1,1)")->delimiter(',')->expected(4);
  app.add_option("--q-codim", q_codim, "Codimension (must match the geometry: 1 torus/weyl-ref, 2 heisenberg/sol)");
  app.add_option("--tol", tol,
                 "Relative tolerance; for mismatch the margin below 2/3 (defaults: torus counting 0.03,\n"
                 "rational 0.05, torus heat/compare 0.03, heisenberg compare 1e-7, sol counting 0.03,\n"
                 "sol mismatch 0.01, weyl-ref counting 0.04, weyl-ref heat 0.02)");
  app.add_option("--potential", potential, "weyl-ref potential: flat | cos (default flat)");
  app.add_option("--out-csv", out_csv, "Write the check table as CSV");
  app.add_option("--out-json", out_json, "Write the JSON summary");
  app.add_option("--report", report, "Write the markdown report");
  app.footer(
      "Defaults per mode are filled in and echoed in the JSON summary.\n"
      "Exit codes: 0 all checks pass, 1 a check failed, 2 config error, 3 convergence failure.");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }

  json doc = json::object();
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw ConfigError("config: cannot open '" + config_path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    doc = parse_json_text(buf.str(), "'" + config_path + "'");
    if (!doc.is_object()) throw ConfigError("config: expected a JSON object");
  }
  const auto given = [&](const std::string& name) { return app.count(name) > 0; };
  if (!geometry.empty()) doc["geometry"] = geometry;
  if (given("--mode")) doc["mode"] = mode;
  if (given("--alpha")) doc["alpha"] = alpha;
  if (sqrt2) doc["alpha"] = "sqrt2";
  if (golden) doc["alpha"] = "golden";
  if (given("--rational")) doc["rational"] = rational;
  if (given("--eps")) doc["eps"] = eps;
  if (given("--t")) doc["t"] = t;
  if (given("--lambda")) doc["lambda"] = lambda;
  if (given("--a")) doc["a"] = a;
  if (given("--mu")) doc["mu"] = mu;
  if (given("--matrix")) doc["matrix"] = matrix;
  if (given("--q-codim")) doc["q_codim"] = q_codim;
  if (given("--tol")) doc["tol"] = tol;
  if (given("--potential")) doc["potential"] = potential;
  if (given("--out-csv")) doc["out_csv"] = out_csv;
  if (given("--out-json")) doc["out_json"] = out_json;
  if (given("--report")) doc["report"] = report;
  // A flag naming a different alpha source replaces the file's choice.
  if ((given("--alpha") || sqrt2 || golden) && !given("--rational")) doc.erase("rational");
  return resolve(doc);
}

std::string config_echo(const ExperimentConfig& c) {
  json j;
  j["geometry"] = to_string(c.geometry);
  j["mode"] = to_string(c.mode);
  if (c.alpha_label.empty()) j["alpha"] = c.alpha;
  else j["alpha"] = c.alpha_label;
  if (c.rational) j["rational"] = std::to_string(c.rational->p) + "/" + std::to_string(c.rational->q);
  j["a"] = c.a;
  j["mu"] = c.mu;
  j["matrix"] = c.matrix;
  j["q_codim"] = c.q_codim;
  j["eps"] = c.eps;
  j["t"] = c.t;
  j["lambda"] = c.lambda;
  j["tol"] = c.tol;
  j["potential"] = to_string(c.potential);
  if (!c.out_csv.empty()) j["out_csv"] = c.out_csv;
  if (!c.out_json.empty()) j["out_json"] = c.out_json;
  if (!c.report.empty()) j["report"] = c.report;
  return j.dump();
}

}  // namespace adialab::experiment
