#include "rieszdrop/splitting.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "rieszdrop/errors.hpp"
#include "rieszdrop/specfun.hpp"

namespace rieszdrop {

namespace {

using std::numbers::pi;

void check_alpha(const char* fn, double alpha) {
  if (!(alpha >= 0.0 && alpha < 2.0)) detail::throw_domain(fn, "alpha must lie in [0, 2)");
}

void check_alpha_le1(const char* fn, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) detail::throw_domain(fn, "alpha must lie in [0, 1]");
}

void check_n(const char* fn, std::int64_t n) {
  if (n < 1) detail::throw_domain(fn, "split count must be >= 1");
}

void check_radius(const char* fn, double r) {
  if (!(r > 0.0) || !std::isfinite(r)) detail::throw_domain(fn, "radius must be positive and finite");
}

}  // namespace

double unit_disk_interaction(double alpha) {
  check_alpha("unit_disk_interaction", alpha);
  return 2.0 * pi * pi * gamma(2.0 - alpha) / (gamma(2.0 - 0.5 * alpha) * gamma(3.0 - 0.5 * alpha));
}

double disk_energy(double radius, double alpha) {
  check_radius("disk_energy", radius);
  return 2.0 * pi * radius + unit_disk_interaction(alpha) * std::pow(radius, 4.0 - alpha);
}

double split_cost(std::int64_t n, double radius, double alpha) {
  check_n("split_cost", n);
  check_radius("split_cost", radius);
  const double count = static_cast<double>(n);
  return count * disk_energy(radius / std::sqrt(count), alpha) / (pi * radius * radius);
}

double crossover_radius(std::int64_t n, double alpha) {
  check_n("crossover_radius", n);
  check_alpha("crossover_radius", alpha);
  const double k = static_cast<double>(n);
  const double exponent = 0.5 * alpha - 1.0;
  // sqrt(n+1) - sqrt(n) and n^e - (n+1)^e without cancellation
  const double sqrt_gap = 1.0 / (std::sqrt(k + 1.0) + std::sqrt(k));
  const double pow_gap = -std::pow(k, exponent) * std::expm1(exponent * std::log1p(1.0 / k));
  const double ratio = 2.0 * pi * sqrt_gap / (unit_disk_interaction(alpha) * pow_gap);
  return std::pow(ratio, 1.0 / (3.0 - alpha));
}

double crossover_cost(std::int64_t n, double alpha) {
  return split_cost(n, crossover_radius(n, alpha), alpha);
}

double split_cost_argmin(std::int64_t n, double alpha) {
  check_n("split_cost_argmin", n);
  check_alpha_le1("split_cost_argmin", alpha);
  const double base = std::pow(2.0 * pi / (unit_disk_interaction(alpha) * (2.0 - alpha)), 1.0 / (3.0 - alpha));
  return std::sqrt(static_cast<double>(n)) * base;
}

EnvelopeSegment envelope_segment(std::int64_t n, double alpha) {
  check_n("envelope_segment", n);
  check_alpha_le1("envelope_segment", alpha);
  return {n, n == 1 ? 0.0 : crossover_radius(n - 1, alpha), crossover_radius(n, alpha)};
}

EnvelopePoint envelope_cost(double radius, double alpha, std::int64_t max_split) {
  check_radius("envelope_cost", radius);
  check_alpha_le1("envelope_cost", alpha);
  if (max_split < 1) detail::throw_domain("envelope_cost", "max_split must be >= 1");

  // Smallest n with radius <= crossover_radius(n); the crossovers increase in n.
  constexpr std::int64_t kLinearScan = 64;
  const std::int64_t scan_end = std::min(kLinearScan, max_split);
  std::int64_t n = 1;
  while (n <= scan_end && radius > crossover_radius(n, alpha)) ++n;

  if (n > scan_end) {
    if (scan_end == max_split) {
      throw SolverError("envelope_cost: optimal split count exceeds max_split = " + std::to_string(max_split));
    }
    // radius > crossover_radius(lo); find hi with radius <= crossover_radius(hi)
    std::int64_t lo = scan_end;
    std::int64_t hi = 2 * lo;
    while (radius > crossover_radius(std::min(hi, max_split), alpha)) {
      if (hi >= max_split) {
        throw SolverError("envelope_cost: optimal split count exceeds max_split = " +
                          std::to_string(max_split));
      }
      lo = hi;
      hi *= 2;
    }
    hi = std::min(hi, max_split);
    while (hi - lo > 1) {
      const std::int64_t mid = lo + (hi - lo) / 2;
      if (radius > crossover_radius(mid, alpha)) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    n = hi;
  }
  return {split_cost(n, radius, alpha), n};
}

double energy_upper_bound(double mass, double alpha) {
  check_alpha_le1("energy_upper_bound", alpha);
  const double r_c1 = crossover_radius(1, alpha);
  const double m_c1 = pi * r_c1 * r_c1;
  // m_c1 computed through the closed form may sit a few ulps off pi R_c1^2
  if (!(mass >= m_c1 * (1.0 - 1e-12)) || !std::isfinite(mass))
    detail::throw_domain("energy_upper_bound", "bound holds only for mass >= m_c1");
  return mass * split_cost(1, r_c1, alpha);
}

}  // namespace rieszdrop
