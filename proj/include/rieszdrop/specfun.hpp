#pragma once

// Special-function kernel: Gamma, the Gauss hypergeometric series 2F1 on
// [0, 1], and the Riesz potential of the unit disk.

#include <cstddef>

namespace rieszdrop {

struct SeriesConfig {
  double rel_term_tol = 1e-16;  // stop once |term| < rel_term_tol * |partial sum|
  std::size_t max_terms = 1'000'000;
};

/// Euler Gamma function for x > 0 (Lanczos, g = 7, 9 terms; reflection
/// below 1/2). Throws DomainError for x <= 0 or non-finite x.
double gamma(double x);

/// Gauss hypergeometric function 2F1(a, b; c; z) for real z in [0, 1].
///
/// z <= 0.75 sums the power series directly. Above that the argument is
/// mapped to 1 - z with the standard connection formula; when c - a - b is
/// a positive integer the logarithmic form of that formula is used. z = 1
/// is evaluated by Gauss summation and requires c - a - b > 0.
///
/// Throws DomainError for c <= 0 or z outside [0, 1], SolverError if a
/// series needs more than cfg.max_terms terms.
double hyp2f1(double a, double b, double c, double z, const SeriesConfig& cfg = {});

/// Potential of the unit disk at distance r from its centre,
/// v(r) = integral over B_1 of |x - y|^-alpha dy, for 0 < alpha < 2.
/// r = 1 takes the outer branch. Accuracy for alpha >= 1 is best-effort.
double disk_potential(double r, double alpha, const SeriesConfig& cfg = {});

/// max_r |d disk_potential / dr|, attained at r = 1; requires 0 < alpha < 1.
double disk_potential_slope_max(double alpha);

}  // namespace rieszdrop
