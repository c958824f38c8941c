#pragma once

// Data products behind the command-line tool: single-alpha summaries,
// alpha sweeps, envelope tables, the crossing exponent and the ledger,
// with their CSV / JSON encodings.
//
// CSV: '.' decimal point, ',' separator, LF endings, 15 significant
// digits, "nan" for failed values. JSON: shortest round-trip numbers.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "rieszdrop/roots.hpp"
#include "rieszdrop/thresholds.hpp"
#include "rieszdrop/verify.hpp"

namespace rieszdrop {

enum class OutputFormat { csv, json };

struct PointSummary {
  double alpha = 0.0;
  double m_c1 = 0.0;
  double R_c1 = 0.0;
  double rho_c1 = 0.0;
  double m_2 = 0.0;
  double R_0 = 0.0;
  double eps_0 = 0.0;
  double eps_1 = 0.0;
  double m_eps0 = 0.0;
  double m_eps1 = 0.0;
};

/// Every threshold at one alpha; requires 0 < alpha <= 1/2.
PointSummary summarize_point(double alpha, const RootSolveConfig& cfg = {});

struct CrossingSummary {
  double alpha0 = 0.0;
  double m_at_crossing = 0.0;  // m_2(alpha0)
  double tol = 0.0;
};

CrossingSummary summarize_crossing(const RootSolveConfig& cfg = {});

struct SweepSpec {
  double alpha_min = 0.0;
  double alpha_max = 0.0;
  int steps = 2;
  OutputFormat format = OutputFormat::csv;
};

struct SweepRow {
  ThresholdSample sample;  // NaN fields when ok == false
  bool ok = true;
};

/// Endpoint-inclusive alpha grid of spec.steps points. Requires
/// 0 <= alpha_min < alpha_max <= 1/2 and steps >= 2. Rows are computed on
/// up to `threads` workers and returned in grid order.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, const RootSolveConfig& cfg = {}, unsigned threads = 1);

struct EnvelopeRow {
  double R = 0.0;
  double rho_1 = 0.0;
  double rho_2 = 0.0;
  double rho_3 = 0.0;
  double rho_min = 0.0;
  std::int64_t n_opt = 1;
};

/// R = r_max * i / steps for i = 1..steps. Requires 0 < alpha <= 1,
/// r_max > 0 and steps >= 2.
std::vector<EnvelopeRow> envelope_table(double alpha, double r_max, int steps);

/// 15 significant digits, locale independent; "nan" for NaN.
std::string format_csv_number(double value);

/// value rounded to 15 significant digits.
double round_significant15(double value);

nlohmann::json to_json(const PointSummary& s);
nlohmann::json to_json(const CrossingSummary& s);
nlohmann::json to_json(const LedgerReport& report);

void write_sweep(std::ostream& out, const std::vector<SweepRow>& rows, OutputFormat format);
void write_envelope(std::ostream& out, const std::vector<EnvelopeRow>& rows, OutputFormat format);

}  // namespace rieszdrop
