#include <numbers>

#include "adialab/experiment.hpp"

namespace adialab::experiment {

namespace {

ExperimentConfig base(Geometry g, Mode m) {
  ExperimentConfig c;
  c.geometry = g;
  c.mode = m;
  c.q_codim = g == Geometry::heisenberg || g == Geometry::sol ? 2 : 1;
  return c;
}

}  // namespace

std::vector<ExperimentConfig> default_suite() {
  std::vector<ExperimentConfig> suite;

  auto c = base(Geometry::torus, Mode::counting);
  c.alpha = std::numbers::sqrt2;
  c.alpha_label = "sqrt2";
  c.eps = {0.01};
  c.lambda = {1e4};
  c.tol = 0.03;
  suite.push_back(c);

  c = base(Geometry::torus, Mode::counting);
  c.rational = torus::RationalSlope{1, 1};
  c.alpha = 1.0;
  c.eps = {0.01};
  c.lambda = {10.0};
  c.tol = 0.05;
  suite.push_back(c);

  c = base(Geometry::torus, Mode::compare);
  c.alpha = std::numbers::sqrt2;
  c.alpha_label = "sqrt2";
  c.eps = {0.04, 0.02, 0.01};
  c.t = {1.0};
  c.tol = 0.03;
  suite.push_back(c);

  c = base(Geometry::torus, Mode::symbol);
  c.alpha = std::numbers::sqrt2;
  c.alpha_label = "sqrt2";
  c.t = {0.5, 1.0, 2.0};
  c.tol = 1e-10;
  suite.push_back(c);

  c = base(Geometry::weyl_ref, Mode::counting);
  c.eps = {0.01};
  c.lambda = {1.0};
  c.tol = 0.04;
  suite.push_back(c);

  c = base(Geometry::weyl_ref, Mode::counting);
  c.potential = Potential::cosine;
  c.eps = {0.01};
  c.lambda = {2.0};
  c.tol = 0.03;
  suite.push_back(c);

  c = base(Geometry::weyl_ref, Mode::heat);
  c.eps = {0.01};
  c.t = {1.0};
  c.tol = 0.02;
  suite.push_back(c);

  c = base(Geometry::weyl_ref, Mode::compare);
  c.lambda = {0.5, 10.0, 1e4};
  c.tol = 1e-12;
  suite.push_back(c);

  c = base(Geometry::heisenberg, Mode::compare);
  c.eps = {0.1};
  c.t = {0.1, 0.5, 1.0, 2.0, 5.0};
  c.tol = 1e-7;
  suite.push_back(c);

  c = base(Geometry::sol, Mode::counting);
  c.alpha = 1.0;
  c.eps = {0.01};
  c.lambda = {5.0};
  c.tol = 0.03;
  suite.push_back(c);

  for (double alpha : {0.5, 1.0, 2.0}) {
    c = base(Geometry::sol, Mode::mismatch);
    c.alpha = alpha;
    c.eps = {0.1};
    c.t = {0.5, 1.0, 2.0};
    c.tol = 0.01;
    suite.push_back(c);
  }

  c = base(Geometry::sol, Mode::compare);
  c.alpha = 0.0;
  c.eps = {0.1};
  c.t = {0.5, 1.0, 2.0};
  c.tol = 1e-12;
  suite.push_back(c);

  return suite;
}

RunResult run_suite() {
  RunResult all;
  for (const auto& config : default_suite()) {
    auto r = run_experiment(config);
    all.checks.insert(all.checks.end(), r.checks.begin(), r.checks.end());
    all.fits.insert(all.fits.end(), r.fits.begin(), r.fits.end());
    all.config_echoes.insert(all.config_echoes.end(), r.config_echoes.begin(), r.config_echoes.end());
    all.failures.insert(all.failures.end(), r.failures.begin(), r.failures.end());
    all.convergence_failure = all.convergence_failure || r.convergence_failure;
  }
  return all;
}

}  // namespace adialab::experiment
