#include "rieszdrop/thresholds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "rieszdrop/errors.hpp"
#include "rieszdrop/specfun.hpp"
#include "rieszdrop/splitting.hpp"

namespace rieszdrop {

namespace {

using std::numbers::pi;

constexpr Bracket kEpsBracket{1e-6, 4.0};
constexpr Bracket kAlpha0Bracket{0.01, 0.10};

void check_open_alpha(const char* fn, double alpha, double upper) {
  if (!(alpha > 0.0 && alpha < upper)) {
    detail::throw_domain(fn, "alpha must lie in (0, " + std::to_string(upper) + ")");
  }
}

void check_eps(const char* fn, double eps) {
  if (!(eps >= 0.0) || !std::isfinite(eps)) detail::throw_domain(fn, "eps must be finite and >= 0");
}

RootSolveConfig nested(const RootSolveConfig& cfg) {
  RootSolveConfig inner = cfg;
  inner.bracket.reset();
  return inner;
}

}  // namespace

double critical_mass(double alpha) {
  if (!(alpha >= 0.0 && alpha < 2.0)) detail::throw_domain("critical_mass", "alpha must lie in [0, 2)");
  if (alpha == 0.0) return pi * std::cbrt(std::pow(4.0 * (std::numbers::sqrt2 - 1.0) / pi, 2.0));
  const double num = (std::numbers::sqrt2 - 1.0) * gamma(2.0 - 0.5 * alpha) * gamma(3.0 - 0.5 * alpha);
  const double den = pi * -std::expm1(0.5 * (alpha - 2.0) * std::numbers::ln2) * gamma(2.0 - alpha);
  return pi * std::pow(num / den, 2.0 / (3.0 - alpha));
}

double nonexistence_cost(double radius, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 0.5)) detail::throw_domain("nonexistence_cost", "alpha must lie in [0, 1/2]");
  if (!(radius > 0.0) || !std::isfinite(radius))
    detail::throw_domain("nonexistence_cost", "radius must be positive and finite");
  const double rho_c1 = crossover_cost(1, alpha);
  const double coeff = std::pow(2.0, alpha) * std::pow(pi, 1.0 - alpha) / std::pow(rho_c1, alpha);
  return 2.0 / radius + coeff * std::pow(radius, 2.0 - 2.0 * alpha);
}

double nonexistence_radius(double alpha, const RootSolveConfig& cfg) {
  if (!(alpha > 0.0 && alpha <= 0.5)) detail::throw_domain("nonexistence_radius", "alpha must lie in (0, 1/2]");
  const double r_c1 = crossover_radius(1, alpha);
  const double rho_c1 = crossover_cost(1, alpha);
  const Bracket bracket = cfg.bracket.value_or(Bracket{r_c1, 4.0 * r_c1});
  return bisect([&](double r) { return nonexistence_cost(r, alpha) - rho_c1; }, bracket, cfg,
                "nonexistence_radius");
}

double nonexistence_mass(double alpha, const RootSolveConfig& cfg) {
  const double r0 = nonexistence_radius(alpha, cfg);
  return pi * r0 * r0;
}

double deficit_bound(double alpha, double eps) {
  check_open_alpha("deficit_bound", alpha, 2.0);
  check_eps("deficit_bound", eps);
  const double v0 = unit_disk_interaction(alpha);
  const double spread = 1.0 + eps * v0 / (2.0 * pi);
  return eps / (2.0 * pi) * (v0 - std::pow(pi, 2.0 - alpha) / std::pow(spread, alpha));
}

double potential_lower_bound(double alpha, double eps) {
  const double c0 = deficit_bound(alpha, eps);
  return std::pow(pi, 1.0 - alpha) / std::pow(1.0 + c0, alpha);
}

double potential_upper_bound(double alpha) {
  check_open_alpha("potential_upper_bound", alpha, 2.0);
  return 2.0 * pi / (2.0 - alpha);
}

double annulus_width_bound(double deficit) {
  if (!(deficit >= 0.0) || !std::isfinite(deficit))
    detail::throw_domain("annulus_width_bound", "deficit must be finite and >= 0");
  return std::sqrt(pi * deficit * (deficit + 2.0));
}

double rigidity_constant(double alpha, double eps) {
  check_open_alpha("rigidity_constant", alpha, 1.0);
  const double c0 = deficit_bound(alpha, eps);
  const double g = gamma(2.0 - 0.5 * alpha);
  const double prefactor = pi * pi * alpha * (2.0 - alpha) * gamma(1.0 - alpha) / (2.0 * g * g);
  return prefactor * (1.0 + 2.0 / 3.0 * std::sqrt(pi * c0 * (c0 + 2.0)));
}

double convexity_margin(double alpha, double eps) {
  const double c0 = deficit_bound(alpha, eps);
  return 1.0 / (1.0 + c0) + 2.0 * eps * (potential_lower_bound(alpha, eps) - potential_upper_bound(alpha));
}

double rigidity_margin(double alpha, double eps) {
  const double c3 = rigidity_constant(alpha, eps);
  const double c0 = deficit_bound(alpha, eps);
  return eps * c3 * (eps * c3 * c0 * (c0 + 2.0) + 2.0) - 1.0;
}

double convexity_threshold(double alpha, const RootSolveConfig& cfg) {
  check_open_alpha("convexity_threshold", alpha, 2.0);
  return bisect([&](double e) { return convexity_margin(alpha, e); }, cfg.bracket.value_or(kEpsBracket), cfg,
                "convexity_threshold");
}

double rigidity_threshold(double alpha, const RootSolveConfig& cfg) {
  check_open_alpha("rigidity_threshold", alpha, 1.0);
  return bisect([&](double e) { return rigidity_margin(alpha, e); }, cfg.bracket.value_or(kEpsBracket), cfg,
                "rigidity_threshold");
}

double mass_of_eps(double eps, double alpha) {
  if (!(eps > 0.0) || !std::isfinite(eps)) detail::throw_domain("mass_of_eps", "eps must be positive and finite");
  if (!(alpha >= 0.0 && alpha < 2.0)) detail::throw_domain("mass_of_eps", "alpha must lie in [0, 2)");
  return pi * std::pow(eps, 2.0 / (3.0 - alpha));
}

double eps_of_mass(double mass, double alpha) {
  if (!(mass > 0.0) || !std::isfinite(mass)) detail::throw_domain("eps_of_mass", "mass must be positive and finite");
  if (!(alpha >= 0.0 && alpha < 2.0)) detail::throw_domain("eps_of_mass", "alpha must lie in [0, 2)");
  return std::pow(mass / pi, 0.5 * (3.0 - alpha));
}

double rigidity_gap(double alpha, const RootSolveConfig& cfg) {
  const RootSolveConfig inner = nested(cfg);
  const double m_eps0 = mass_of_eps(convexity_threshold(alpha, inner), alpha);
  const double m_eps1 = mass_of_eps(rigidity_threshold(alpha, inner), alpha);
  return std::min(m_eps0, m_eps1) - nonexistence_mass(alpha, inner);
}

double crossing_exponent(const RootSolveConfig& cfg) {
  RootSolveConfig outer = cfg;
  outer.max_expansions = 0;  // the crossing bracket is fixed
  return bisect([&](double a) { return rigidity_gap(a, cfg); }, cfg.bracket.value_or(kAlpha0Bracket), outer,
                "crossing_exponent");
}

ThresholdSample sample_thresholds(double alpha, const RootSolveConfig& cfg) {
  const RootSolveConfig inner = nested(cfg);
  ThresholdSample s;
  s.alpha = alpha;
  s.m_c1 = critical_mass(alpha);
  s.m_2 = nonexistence_mass(alpha, inner);
  s.m_eps0 = mass_of_eps(convexity_threshold(alpha, inner), alpha);
  s.m_eps1 = mass_of_eps(rigidity_threshold(alpha, inner), alpha);
  return s;
}

}  // namespace rieszdrop
