#pragma once

// Bracketed bisection shared by every threshold solver.

#include <functional>
#include <optional>
#include <string>

namespace rieszdrop {

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
};

// Endpoint values seen right before iteration starts. Reported once per solve.
struct BisectionStart {
  std::string objective;
  Bracket bracket;
  double f_lo = 0.0;
  double f_hi = 0.0;
};

struct RootSolveConfig {
  // Overrides the solver's default initial bracket when set.
  std::optional<Bracket> bracket;
  double rel_tol = 1e-12;
  int max_iter = 200;
  // Upper-end doublings tried when the initial bracket has no sign change.
  int max_expansions = 60;
  // Optional observer; must be safe to call from the calling thread.
  std::function<void(const BisectionStart&)> on_start;
};

/// Bisection on [bracket.lo, bracket.hi]. If f(lo) and f(hi) share a sign,
/// the upper end is doubled up to cfg.max_expansions times. Stops when the
/// bracket width is below cfg.rel_tol * |midpoint|. Throws BracketError if
/// no sign change is found and SolverError if cfg.max_iter is exhausted.
double bisect(const std::function<double(double)>& f, Bracket bracket, const RootSolveConfig& cfg,
              const std::string& objective);

}  // namespace rieszdrop
