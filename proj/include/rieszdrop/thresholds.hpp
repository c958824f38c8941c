#pragma once

// Mass thresholds as functions of the Riesz exponent alpha:
//
//   m_c1      one disk and two half-mass disks have equal energy
//   m_2       above it no minimiser exists
//   m(eps_0)  below it minimisers are strictly convex
//   m(eps_1)  below it convex minimisers are disks
//
// and the exponent alpha_0 where m_2 meets min(m(eps_0), m(eps_1)).
// eps is the rescaled mass (m / pi)^((3 - alpha) / 2).

#include "rieszdrop/roots.hpp"

namespace rieszdrop {

/// Critical mass m_c1(alpha), 0 <= alpha < 2. alpha = 0 uses the exact
/// limit pi (4 (sqrt 2 - 1) / pi)^(2/3).
double critical_mass(double alpha);

/// Auxiliary cost 2/R + 2^a pi^(1-a) rho_c1^(-a) R^(2-2a) that bounds the
/// per-area energy of any minimiser from below; 0 <= alpha <= 1/2.
double nonexistence_cost(double radius, double alpha);

/// Radius R_0 >= R_c1 where nonexistence_cost meets rho_c1; 0 < alpha <= 1/2.
/// Default bracket [R_c1, 4 R_c1].
double nonexistence_radius(double alpha, const RootSolveConfig& cfg = {});

/// m_2 = pi R_0^2.
double nonexistence_mass(double alpha, const RootSolveConfig& cfg = {});

// Constants bounding the deficit, the potential and its variation for a
// rescaled minimiser at parameter eps >= 0 (eps = 0 is the trivial limit).
double deficit_bound(double alpha, double eps);         // C_0, 0 < alpha < 2
double potential_lower_bound(double alpha, double eps);  // C_1
double potential_upper_bound(double alpha);              // C_2 = 2 pi / (2 - alpha)
double rigidity_constant(double alpha, double eps);      // C_3, 0 < alpha < 1

/// Bonnesen annulus half-width bound sqrt(pi D (D + 2)) for deficit D >= 0.
double annulus_width_bound(double deficit);

/// 1/(1 + C_0) + 2 eps (C_1 - C_2). Positive exactly below eps_0.
double convexity_margin(double alpha, double eps);

/// eps C_3 [eps C_3 C_0 (C_0 + 2) + 2] - 1. Negative exactly below eps_1.
double rigidity_margin(double alpha, double eps);

/// Root eps_0 of convexity_margin; default bracket [1e-6, 4].
double convexity_threshold(double alpha, const RootSolveConfig& cfg = {});

/// Root eps_1 of rigidity_margin; default bracket [1e-6, 4].
double rigidity_threshold(double alpha, const RootSolveConfig& cfg = {});

/// m = pi eps^(2 / (3 - alpha)) and its inverse.
double mass_of_eps(double eps, double alpha);
double eps_of_mass(double mass, double alpha);

/// min(m(eps_0), m(eps_1)) - m_2 at alpha.
double rigidity_gap(double alpha, const RootSolveConfig& cfg = {});

/// Crossing exponent alpha_0: root of rigidity_gap, default bracket
/// [0.01, 0.10]. cfg.rel_tol is also passed to the nested solves.
double crossing_exponent(const RootSolveConfig& cfg = {});

// All four mass curves at one alpha.
struct ThresholdSample {
  double alpha = 0.0;
  double m_c1 = 0.0;
  double m_2 = 0.0;
  double m_eps0 = 0.0;
  double m_eps1 = 0.0;
};

ThresholdSample sample_thresholds(double alpha, const RootSolveConfig& cfg = {});

}  // namespace rieszdrop
