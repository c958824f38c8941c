#pragma once

// Energies of disks and of equal-mass splittings into n disks sent
// infinitely far apart, and the lower envelope of the per-area costs.
//
// Throughout, R is the radius of the single disk carrying the total mass
// m = pi R^2, and 0 <= alpha < 2 (alpha = 0 is the exact limiting case).

#include <cstdint>

namespace rieszdrop {

/// Self-interaction of the unit disk, V(B_1) = 2 pi^2 G(2-a) / (G(2-a/2) G(3-a/2)).
double unit_disk_interaction(double alpha);

/// Energy 2 pi R + V(B_1) R^(4-alpha) of one disk of radius R.
double disk_energy(double radius, double alpha);

/// Energy per unit area when mass pi R^2 is split into n equal disks.
double split_cost(std::int64_t n, double radius, double alpha);

/// Radius where the n-disk and (n+1)-disk costs coincide.
double crossover_radius(std::int64_t n, double alpha);

/// Cost at that crossover, split_cost(n, crossover_radius(n)).
double crossover_cost(std::int64_t n, double alpha);

/// Minimiser of split_cost(n, .); requires alpha <= 1.
double split_cost_argmin(std::int64_t n, double alpha);

// Interval (r_lo, r_hi] on which n equal disks give the cheapest splitting.
struct EnvelopeSegment {
  std::int64_t n = 1;
  double r_lo = 0.0;
  double r_hi = 0.0;
};

EnvelopeSegment envelope_segment(std::int64_t n, double alpha);

struct EnvelopePoint {
  double value = 0.0;
  std::int64_t n_opt = 1;
};

inline constexpr std::int64_t kDefaultMaxSplit = 1'000'000;

/// Lower envelope min_n split_cost(n, R) and the optimal n, located by
/// searching the increasing crossover radii (ties go to the smaller n).
/// Requires alpha <= 1. Throws SolverError if n_opt would exceed max_split.
EnvelopePoint envelope_cost(double radius, double alpha, std::int64_t max_split = kDefaultMaxSplit);

/// m * crossover_cost(1): energy bound for masses m >= pi R_c1^2.
double energy_upper_bound(double mass, double alpha);

}  // namespace rieszdrop
