#include "rieszdrop/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>

#include "rieszdrop/errors.hpp"
#include "rieszdrop/parallel.hpp"
#include "rieszdrop/specfun.hpp"
#include "rieszdrop/splitting.hpp"
#include "rieszdrop/thresholds.hpp"

namespace rieszdrop {

namespace {

struct CheckSpec {
  const char* name;
  const char* claim;
  Relation relation;
  double lower;
  double upper;
};

// Order matches LedgerPoint::values.
constexpr std::array<CheckSpec, 18> kChecks = {{
    {"gamma_2_minus_alpha", "0.986 <= Gamma(2 - alpha) <= 1", Relation::within, 0.986, 1.0},
    {"gamma_2_minus_half_alpha", "0.992 <= Gamma(2 - alpha/2) <= 1", Relation::within, 0.992, 1.0},
    {"gamma_3_minus_half_alpha", "1.968 <= Gamma(3 - alpha/2) <= 2", Relation::within, 1.968, 2.0},
    {"gamma_1_minus_alpha", "1 <= Gamma(1 - alpha) <= 1.021", Relation::within, 1.0, 1.021},
    {"m_c1", "2.007 <= m_c1(alpha) <= 2.087", Relation::within, 2.007, 2.087},
    {"C0", "C0(alpha, eps) <= 0.121", Relation::less_equal, 0.0, 0.121},
    {"C3", "C3(alpha, eps) <= 0.557", Relation::less_equal, 0.0, 0.557},
    {"F1", "F1(alpha, eps) < 0", Relation::less, 0.0, 0.0},
    {"C1", "C1(alpha, eps) >= 3.009", Relation::greater_equal, 3.009, 0.0},
    {"C2", "C2(alpha) <= 3.196", Relation::less_equal, 0.0, 3.196},
    {"F2", "F2(alpha, eps) >= 0.575", Relation::greater_equal, 0.575, 0.0},
    {"R_c1", "0.799 <= R_c1(alpha) <= 0.815", Relation::within, 0.799, 0.815},
    {"rho_c1", "rho_c1(alpha) <= 4.656", Relation::less_equal, 0.0, 4.656},
    {"rho0", "rho0(alpha, R) >= 4.677", Relation::greater_equal, 4.677, 0.0},
    {"F3", "F3(alpha, R) >= 0.021", Relation::greater_equal, 0.021, 0.0},
    {"m_2", "m_2(alpha) < 2.806", Relation::less, 0.0, 2.806},
    {"m_eps0", "m(eps_0(alpha)) > 2.806", Relation::greater, 2.806, 0.0},
    {"m_eps1", "m(eps_1(alpha)) > 2.806", Relation::greater, 2.806, 0.0},
}};

using LedgerPoint = std::array<double, kChecks.size()>;

LedgerPoint evaluate_point(double alpha, const LedgerConfig& cfg) {
  const double eps = cfg.eps_probe;
  return {
      gamma(2.0 - alpha),
      gamma(2.0 - 0.5 * alpha),
      gamma(3.0 - 0.5 * alpha),
      gamma(1.0 - alpha),
      critical_mass(alpha),
      deficit_bound(alpha, eps),
      rigidity_constant(alpha, eps),
      rigidity_margin(alpha, eps),
      potential_lower_bound(alpha, eps),
      potential_upper_bound(alpha),
      convexity_margin(alpha, eps),
      crossover_radius(1, alpha),
      crossover_cost(1, alpha),
      nonexistence_cost(cfg.r_probe, alpha),
      nonexistence_excess(alpha, cfg.r_probe),
      nonexistence_mass(alpha, cfg.solve),
      mass_of_eps(convexity_threshold(alpha, cfg.solve), alpha),
      mass_of_eps(rigidity_threshold(alpha, cfg.solve), alpha),
  };
}

void settle(LedgerCheck& c) {
  const double low_slack = c.attained_min - c.lower;
  const double high_slack = c.upper - c.attained_max;
  switch (c.relation) {
    case Relation::less:
    case Relation::less_equal:
      c.attained = c.attained_max;
      c.bound = c.upper;
      c.worst_alpha = c.alpha_at_max;
      c.margin = high_slack;
      break;
    case Relation::greater:
    case Relation::greater_equal:
      c.attained = c.attained_min;
      c.bound = c.lower;
      c.worst_alpha = c.alpha_at_min;
      c.margin = low_slack;
      break;
    case Relation::within:
      if (low_slack <= high_slack) {
        c.attained = c.attained_min;
        c.bound = c.lower;
        c.worst_alpha = c.alpha_at_min;
        c.margin = low_slack;
      } else {
        c.attained = c.attained_max;
        c.bound = c.upper;
        c.worst_alpha = c.alpha_at_max;
        c.margin = high_slack;
      }
      break;
  }
  const bool strict = c.relation == Relation::less || c.relation == Relation::greater;
  c.pass = strict ? c.margin > 0.0 : c.margin >= 0.0;
}

}  // namespace

double nonexistence_excess(double alpha, double radius) {
  if (!(alpha > 0.0 && alpha <= 0.5)) detail::throw_domain("nonexistence_excess", "alpha must lie in (0, 1/2]");
  return nonexistence_cost(radius, alpha) - crossover_cost(1, alpha);
}

const char* relation_symbol(Relation r) {
  switch (r) {
    case Relation::less: return "<";
    case Relation::less_equal: return "<=";
    case Relation::greater: return ">";
    case Relation::greater_equal: return ">=";
    case Relation::within: return "in";
  }
  return "?";
}

bool LedgerReport::pass() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const LedgerCheck& c) { return c.pass; });
}

std::vector<double> ledger_alpha_grid(double alpha_max, int grid) {
  if (!(alpha_max > 0.0 && alpha_max <= 0.5)) detail::throw_domain("run_ledger", "alpha_max must lie in (0, 1/2]");
  if (grid < 2) detail::throw_domain("run_ledger", "grid must be >= 2");
  constexpr double kSmallAlpha = 1e-6;
  std::vector<double> alphas;
  alphas.reserve(static_cast<std::size_t>(grid) + 1);
  if (kSmallAlpha < alpha_max / grid) alphas.push_back(kSmallAlpha);
  for (int i = 1; i <= grid; ++i) alphas.push_back(alpha_max * i / grid);
  return alphas;
}

LedgerReport run_ledger(const LedgerConfig& cfg) {
  if (!(cfg.eps_probe > 0.0)) detail::throw_domain("run_ledger", "eps_probe must be positive");
  if (!(cfg.r_probe > 0.0)) detail::throw_domain("run_ledger", "r_probe must be positive");
  const std::vector<double> alphas = ledger_alpha_grid(cfg.alpha_max, cfg.grid);

  std::vector<LedgerPoint> points(alphas.size());
  parallel_for(alphas.size(), cfg.threads, [&](std::size_t i) { points[i] = evaluate_point(alphas[i], cfg); });

  LedgerReport report;
  report.grid_points = static_cast<int>(alphas.size());
  report.alpha_max = cfg.alpha_max;
  report.eps_probe = cfg.eps_probe;
  report.r_probe = cfg.r_probe;
  report.checks.reserve(kChecks.size());
  for (std::size_t k = 0; k < kChecks.size(); ++k) {
    const CheckSpec& spec = kChecks[k];
    LedgerCheck c;
    c.name = spec.name;
    c.claim = spec.claim;
    c.relation = spec.relation;
    c.lower = spec.lower;
    c.upper = spec.upper;
    c.attained_min = c.attained_max = points[0][k];
    c.alpha_at_min = c.alpha_at_max = alphas[0];
    for (std::size_t i = 1; i < points.size(); ++i) {
      const double v = points[i][k];
      if (v < c.attained_min) {
        c.attained_min = v;
        c.alpha_at_min = alphas[i];
      }
      if (v > c.attained_max) {
        c.attained_max = v;
        c.alpha_at_max = alphas[i];
      }
    }
    settle(c);
    report.checks.push_back(std::move(c));
  }
  return report;
}

}  // namespace rieszdrop
