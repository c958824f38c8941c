#pragma once

// Grid reproduction of the inequality chain behind the "disks or nothing"
// theorem for 0 < alpha <= alpha_max. This is dense evaluation, not a
// certified (interval-arithmetic) proof.

#include <string>
#include <vector>

#include "rieszdrop/roots.hpp"

namespace rieszdrop {

/// nonexistence_cost(R) - rho_c1; positive at R means R_0 < R. 0 < alpha <= 1/2.
double nonexistence_excess(double alpha, double radius);

enum class Relation { less, less_equal, greater, greater_equal, within };

const char* relation_symbol(Relation r);

struct LedgerCheck {
  std::string name;
  std::string claim;
  Relation relation = Relation::less_equal;
  double lower = 0.0;  // used by >=, >, within
  double upper = 0.0;  // used by <=, <, within

  double attained_min = 0.0;
  double attained_max = 0.0;
  double alpha_at_min = 0.0;
  double alpha_at_max = 0.0;

  // The side with the least slack.
  double attained = 0.0;
  double bound = 0.0;
  double worst_alpha = 0.0;
  double margin = 0.0;  // signed slack, > 0 means satisfied with room
  bool pass = false;
};

struct LedgerConfig {
  double alpha_max = 0.034;
  double eps_probe = 0.846;
  double r_probe = 0.945;
  int grid = 1000;
  unsigned threads = 1;  // 0 = hardware concurrency
  RootSolveConfig solve;
};

struct LedgerReport {
  std::vector<LedgerCheck> checks;
  int grid_points = 0;
  double alpha_max = 0.0;
  double eps_probe = 0.0;
  double r_probe = 0.0;

  bool pass() const;
};

/// alpha grid used by run_ledger: alpha_max * i / grid for i = 1..grid,
/// plus alpha = 1e-6 when it is below alpha_max, sorted ascending.
std::vector<double> ledger_alpha_grid(double alpha_max, int grid);

/// Requires 0 < alpha_max <= 1/2 and grid >= 2. A failed inequality is
/// reported, not thrown; solver failures propagate.
LedgerReport run_ledger(const LedgerConfig& cfg = {});

}  // namespace rieszdrop
