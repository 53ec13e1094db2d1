#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "adialab/experiment.hpp"

namespace adialab::experiment {

using nlohmann::json;

namespace {

std::string csv_number(double x) { return std::isnan(x) ? std::string() : format_double(x); }

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string short_number(double x) {
  if (std::isnan(x)) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

json json_number(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  out << content;
}

bool ran(const RunResult& r, Geometry g, std::initializer_list<Mode> modes, bool& all_pass) {
  bool any = false;
  all_pass = true;
  for (const auto& c : r.checks) {
    if (c.geometry != g) continue;
    bool match = false;
    for (auto m : modes) match = match || c.mode == m;
    if (!match) continue;
    any = true;
    all_pass = all_pass && c.pass;
  }
  return any;
}

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? ", " : "") + parts[i];
  return s;
}

}  // namespace

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string render_csv(const RunResult& result) {
  std::string out = "geometry,mode,alpha,rational_p,rational_q,epsilon,t,lambda,observed,predicted,ratio,tolerance,pass,provenance\n";
  for (const auto& c : result.checks) {
    out += std::string(to_string(c.geometry)) + "," + std::string(to_string(c.mode)) + "," + format_double(c.alpha) + ",";
    out += (c.rational ? std::to_string(c.rational->p) : "") + "," + (c.rational ? std::to_string(c.rational->q) : "") + ",";
    out += csv_number(c.eps) + "," + csv_number(c.t) + "," + csv_number(c.lambda) + ",";
    out += csv_number(c.observed) + "," + csv_number(c.predicted) + "," + csv_number(c.ratio) + ",";
    out += csv_number(c.tolerance) + "," + (c.pass ? "true" : "false") + ",";
    std::string prov = c.name + ": " + c.provenance;
    if (c.kind == CheckKind::upper_bound) prov += " (upper bound: ratio < " + format_double(c.bound) + ")";
    out += csv_quote(prov) + "\n";
  }
  return out;
}

std::string render_json(const RunResult& result) {
  json doc;
  json echoes = json::array();
  for (const auto& e : result.config_echoes) echoes.push_back(json::parse(e));
  doc["config_echo"] = echoes.size() == 1 ? echoes[0] : echoes;
  json checks = json::array();
  for (const auto& c : result.checks) {
    json j;
    j["name"] = c.name;
    j["geometry"] = to_string(c.geometry);
    j["mode"] = to_string(c.mode);
    j["alpha"] = json_number(c.alpha);
    if (c.rational) j["rational"] = {c.rational->p, c.rational->q};
    j["epsilon"] = json_number(c.eps);
    j["t"] = json_number(c.t);
    j["lambda"] = json_number(c.lambda);
    j["observed"] = json_number(c.observed);
    j["predicted"] = json_number(c.predicted);
    j["ratio"] = json_number(c.ratio);
    j["tolerance"] = json_number(c.tolerance);
    j["kind"] = c.kind == CheckKind::relative ? "relative" : "upper_bound";
    if (c.kind == CheckKind::upper_bound) j["bound"] = json_number(c.bound);
    j["pass"] = c.pass;
    j["provenance"] = c.provenance;
    checks.push_back(j);
  }
  doc["checks"] = checks;
  json fits = json::array();
  for (const auto& f : result.fits)
    fits.push_back({{"name", f.name},
                    {"coefficient", json_number(f.coefficient)},
                    {"exponent", json_number(f.exponent)},
                    {"residual", json_number(f.residual)}});
  doc["fits"] = fits;
  doc["failures"] = result.failures;
  doc["verdict"] = verdict_line(result);
  doc["exit_code"] = exit_code(result);
  return doc.dump(2) + "\n";
}

std::string verdict_line(const RunResult& result) {
  std::vector<std::string> confirmed, unconfirmed;
  bool ok = false;
  if (ran(result, Geometry::torus, {Mode::heat, Mode::compare}, ok)) (ok ? confirmed : unconfirmed).push_back("torus");
  if (ran(result, Geometry::weyl_ref, {Mode::heat}, ok)) (ok ? confirmed : unconfirmed).push_back("product reference");
  if (ran(result, Geometry::heisenberg, {Mode::compare, Mode::heat}, ok))
    (ok ? confirmed : unconfirmed).push_back("Heisenberg-internal");
  if (ran(result, Geometry::sol, {Mode::compare}, ok)) (ok ? confirmed : unconfirmed).push_back("α=0 Sol");

  std::vector<std::string> parts;
  if (!confirmed.empty()) parts.push_back("CONFIRMED (" + join(confirmed) + ")");
  if (!unconfirmed.empty()) parts.push_back("NOT CONFIRMED (" + join(unconfirmed) + ")");
  if (ran(result, Geometry::sol, {Mode::mismatch}, ok)) {
    double worst = 0.0;
    for (const auto& c : result.checks)
      if (c.geometry == Geometry::sol && c.mode == Mode::mismatch && std::isfinite(c.ratio))
        worst = std::max(worst, c.ratio);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", worst);
    parts.push_back(ok ? "FAILS (Sol α≠0, ratio " + std::string(buf) + " < 2/3)"
                       : "failure not demonstrated (Sol α≠0, max ratio " + std::string(buf) + ")");
  }
  if (parts.empty()) return "NC Weyl formula: no verdict (no noncommutative Weyl comparison run)";
  std::string line = "NC Weyl formula: " + parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) line += " / " + parts[i];
  return line;
}

std::string render_report(const RunResult& result) {
  std::ostringstream out;
  out << "# Adiabatic-limit spectral checks\n\n";
  if (result.checks.empty()) {
    out << "no experiments run\n\n" << verdict_line(result) << "\n";
    return out.str();
  }
  std::vector<Geometry> order;
  for (const auto& c : result.checks)
    if (std::find(order.begin(), order.end(), c.geometry) == order.end()) order.push_back(c.geometry);
  std::size_t passed = 0;
  for (Geometry g : order) {
    out << "## " << to_string(g) << "\n\n";
    out << "| check | mode | alpha | eps | t | lambda | observed | predicted | ratio | tolerance | pass |\n";
    out << "|---|---|---|---|---|---|---|---|---|---|---|\n";
    for (const auto& c : result.checks) {
      if (c.geometry != g) continue;
      passed += c.pass ? 1 : 0;
      std::string alpha = short_number(c.alpha);
      if (c.rational) alpha = std::to_string(c.rational->p) + "/" + std::to_string(c.rational->q);
      std::string tol = short_number(c.tolerance);
      if (c.kind == CheckKind::upper_bound) tol = "< " + short_number(c.bound);
      out << "| " << c.name << " | " << to_string(c.mode) << " | " << alpha << " | " << short_number(c.eps) << " | "
          << short_number(c.t) << " | " << short_number(c.lambda) << " | " << short_number(c.observed) << " | "
          << short_number(c.predicted) << " | " << short_number(c.ratio) << " | " << tol << " | "
          << (c.pass ? "PASS" : "FAIL") << " |\n";
    }
    out << "\n";
  }
  if (!result.fits.empty()) {
    out << "## power-law fits\n\n| fit | coefficient | exponent | residual |\n|---|---|---|---|\n";
    for (const auto& f : result.fits)
      out << "| " << f.name << " | " << short_number(f.coefficient) << " | " << short_number(f.exponent) << " | "
          << short_number(f.residual) << " |\n";
    out << "\n";
  }
  if (!result.failures.empty()) {
    out << "## computation failures\n\n";
    for (const auto& f : result.failures) out << "- " << f << "\n";
    out << "\n";
  }
  out << passed << " of " << result.checks.size() << " checks pass.\n\n";
  out << verdict_line(result) << "\n";
  return out.str();
}

void write_outputs(const ExperimentConfig& config, const RunResult& result) {
  if (!config.out_csv.empty()) write_file(config.out_csv, render_csv(result));
  if (!config.out_json.empty()) write_file(config.out_json, render_json(result));
  if (!config.report.empty()) write_file(config.report, render_report(result));
}

}  // namespace adialab::experiment
