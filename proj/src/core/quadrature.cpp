#include "adialab/quadrature.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "adialab/errors.hpp"
#include "adialab/summation.hpp"

namespace adialab {

namespace {

constexpr int kOrder = 10;
constexpr std::size_t kInitialPanels = 16;

struct GaussLegendreRule {
  std::array<double, kOrder> nodes{};
  std::array<double, kOrder> weights{};
};

// Nodes and weights on [-1, 1] by Newton iteration on P_n.
GaussLegendreRule make_rule() {
  GaussLegendreRule rule;
  for (int i = 0; i < kOrder; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (kOrder + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int n = 2; n <= kOrder; ++n) {
        const double p2 = ((2.0 * n - 1.0) * x * p1 - (n - 1.0) * p0) / n;
        p0 = p1;
        p1 = p2;
      }
      dp = kOrder * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

const GaussLegendreRule& rule() {
  static const GaussLegendreRule r = make_rule();
  return r;
}

double composite(const Integrand& f, double lo, double hi, std::size_t panels) {
  const auto& gl = rule();
  const double width = (hi - lo) / static_cast<double>(panels);
  std::vector<double> sums(panels);
  for (std::size_t p = 0; p < panels; ++p) {
    const double mid = lo + (static_cast<double>(p) + 0.5) * width;
    double s = 0.0;
    for (int i = 0; i < kOrder; ++i) s += gl.weights[i] * f(mid + 0.5 * width * gl.nodes[i]);
    sums[p] = 0.5 * width * s;
  }
  return pairwise_sum(sums);
}

std::string fmt_interval(double lo, double hi) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "[%.6g, %.6g]", lo, hi);
  return buf;
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0.0)) throw ParameterError("QuadratureSpec: rel_tol must be positive");
  if (!(abs_tol > 0.0)) throw ParameterError("QuadratureSpec: abs_tol must be positive");
  if (max_refinements < 1) throw ParameterError("QuadratureSpec: max_refinements must be >= 1");
}

double QuadratureSpec::radius_for(double decay_rate) const {
  if (!(decay_rate > 0.0)) throw ParameterError("decay rate must be positive");
  if (truncation_radius) return truncation_radius(decay_rate);
  // exp(-t R^2) < abs_tol / 10, with a floor of 8 / sqrt(t).
  const double tail = std::sqrt(std::log(10.0 / abs_tol) / decay_rate);
  return std::max(tail * (1.0 + 1e-12), 8.0 / std::sqrt(decay_rate));
}

double integrate_interval(const Integrand& f, double lo, double hi, const QuadratureSpec& spec) {
  spec.validate();
  if (!(hi > lo)) {
    if (hi == lo) return 0.0;
    return -integrate_interval(f, hi, lo, spec);
  }
  std::size_t panels = kInitialPanels;
  double previous = composite(f, lo, hi, panels);
  double current = previous;
  for (int level = 1; level <= spec.max_refinements; ++level) {
    panels *= 2;
    current = composite(f, lo, hi, panels);
    if (!std::isfinite(current)) {
      throw ConvergenceError("integrand not finite on " + fmt_interval(lo, hi), previous, current);
    }
    if (std::abs(current - previous) <= std::max(spec.abs_tol, spec.rel_tol * std::abs(current))) {
      return current;
    }
    previous = current;
  }
  throw ConvergenceError("quadrature did not converge on " + fmt_interval(lo, hi), previous, current);
}

double integrate_line(const Integrand& f, double decay_rate, const QuadratureSpec& spec) {
  const double radius = spec.radius_for(decay_rate);
  return integrate_interval(f, -radius, radius, spec);
}

double integrate_plane(const Integrand2D& f, double decay_rate, const QuadratureSpec& spec) {
  return integrate_plane(f, decay_rate, [decay_rate](double) { return decay_rate; }, spec);
}

double integrate_plane(const Integrand2D& f, double outer_decay_rate,
                       const std::function<double(double)>& inner_decay_rate,
                       const QuadratureSpec& spec) {
  const auto inner = [&](double x) {
    try {
      return integrate_line([&](double y) { return f(x, y); }, inner_decay_rate(x), spec);
    } catch (const ConvergenceError& e) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "inner axis (y) at x=%.6g: ", x);
      throw ConvergenceError(buf + std::string(e.what()), e.previous_estimate(), e.last_estimate());
    }
  };
  try {
    return integrate_line(inner, outer_decay_rate, spec);
  } catch (const ConvergenceError& e) {
    if (std::string(e.what()).rfind("inner axis", 0) == 0) throw;
    throw ConvergenceError("outer axis (x): " + std::string(e.what()), e.previous_estimate(),
                           e.last_estimate());
  }
}

}  // namespace adialab
