#include "rieszdrop/roots.hpp"

#include <cmath>

#include "rieszdrop/errors.hpp"

namespace rieszdrop {

namespace {

bool same_sign(double a, double b) { return (a > 0.0 && b > 0.0) || (a < 0.0 && b < 0.0); }

}  // namespace

double bisect(const std::function<double(double)>& f, Bracket bracket, const RootSolveConfig& cfg,
              const std::string& objective) {
  if (!(bracket.lo < bracket.hi)) throw BracketError(objective + ": bracket must satisfy lo < hi");
  if (!(cfg.rel_tol > 0.0) || cfg.max_iter < 1) throw BracketError(objective + ": invalid RootSolveConfig");

  double f_lo = f(bracket.lo);
  double f_hi = f(bracket.hi);
  for (int k = 0; same_sign(f_lo, f_hi) && k < cfg.max_expansions; ++k) {
    bracket.hi *= 2.0;
    f_hi = f(bracket.hi);
  }
  if (std::isnan(f_lo) || std::isnan(f_hi)) throw SolverError(objective + ": objective is NaN at the bracket");
  if (same_sign(f_lo, f_hi)) {
    throw BracketError(objective + ": no sign change on [" + std::to_string(bracket.lo) + ", " +
                       std::to_string(bracket.hi) + "]");
  }
  if (cfg.on_start) cfg.on_start(BisectionStart{objective, bracket, f_lo, f_hi});

  if (f_lo == 0.0) return bracket.lo;
  if (f_hi == 0.0) return bracket.hi;

  double lo = bracket.lo;
  double hi = bracket.hi;
  for (int it = 0; it < cfg.max_iter; ++it) {
    const double mid = lo + 0.5 * (hi - lo);
    if (hi - lo <= cfg.rel_tol * std::abs(mid) || mid == lo || mid == hi) return mid;
    const double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if (same_sign(f_mid, f_lo)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  throw SolverError(objective + ": bisection did not reach tolerance in " + std::to_string(cfg.max_iter) +
                    " iterations");
}

}  // namespace rieszdrop
