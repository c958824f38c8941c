#include "rieszdrop/report.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <string>
#include <system_error>

#include "rieszdrop/errors.hpp"
#include "rieszdrop/parallel.hpp"
#include "rieszdrop/splitting.hpp"

namespace rieszdrop {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

nlohmann::json number_or_null(double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); }

}  // namespace

PointSummary summarize_point(double alpha, const RootSolveConfig& cfg) {
  if (!(alpha > 0.0 && alpha <= 0.5)) detail::throw_domain("summarize_point", "alpha must lie in (0, 1/2]");
  PointSummary s;
  s.alpha = alpha;
  s.m_c1 = critical_mass(alpha);
  s.R_c1 = crossover_radius(1, alpha);
  s.rho_c1 = crossover_cost(1, alpha);
  s.R_0 = nonexistence_radius(alpha, cfg);
  s.m_2 = std::numbers::pi * s.R_0 * s.R_0;
  s.eps_0 = convexity_threshold(alpha, cfg);
  s.eps_1 = rigidity_threshold(alpha, cfg);
  s.m_eps0 = mass_of_eps(s.eps_0, alpha);
  s.m_eps1 = mass_of_eps(s.eps_1, alpha);
  return s;
}

CrossingSummary summarize_crossing(const RootSolveConfig& cfg) {
  CrossingSummary s;
  s.alpha0 = crossing_exponent(cfg);
  RootSolveConfig inner;
  inner.rel_tol = cfg.rel_tol;
  inner.max_iter = cfg.max_iter;
  s.m_at_crossing = nonexistence_mass(s.alpha0, inner);
  s.tol = cfg.rel_tol * s.alpha0;
  return s;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, const RootSolveConfig& cfg, unsigned threads) {
  if (!(spec.alpha_min >= 0.0 && spec.alpha_min < spec.alpha_max && spec.alpha_max <= 0.5))
    detail::throw_domain("run_sweep", "need 0 <= alpha_min < alpha_max <= 1/2");
  if (spec.steps < 2) detail::throw_domain("run_sweep", "steps must be >= 2");

  const auto n = static_cast<std::size_t>(spec.steps);
  std::vector<SweepRow> rows(n);
  parallel_for(n, threads, [&](std::size_t i) {
    const double alpha = i + 1 == n ? spec.alpha_max
                                    : spec.alpha_min + (spec.alpha_max - spec.alpha_min) * static_cast<double>(i) /
                                                           static_cast<double>(n - 1);
    try {
      rows[i].sample = sample_thresholds(alpha, cfg);
    } catch (const std::exception&) {
      rows[i].sample = ThresholdSample{alpha, kNaN, kNaN, kNaN, kNaN};
      rows[i].ok = false;
    }
  });
  return rows;
}

std::vector<EnvelopeRow> envelope_table(double alpha, double r_max, int steps) {
  if (!(alpha > 0.0 && alpha <= 1.0)) detail::throw_domain("envelope_table", "alpha must lie in (0, 1]");
  if (!(r_max > 0.0) || !std::isfinite(r_max)) detail::throw_domain("envelope_table", "r_max must be positive");
  if (steps < 2) detail::throw_domain("envelope_table", "steps must be >= 2");
  std::vector<EnvelopeRow> rows;
  rows.reserve(static_cast<std::size_t>(steps));
  for (int i = 1; i <= steps; ++i) {
    const double r = i == steps ? r_max : r_max * i / steps;
    const EnvelopePoint env = envelope_cost(r, alpha);
    rows.push_back({r, split_cost(1, r, alpha), split_cost(2, r, alpha), split_cost(3, r, alpha), env.value,
                    env.n_opt});
  }
  return rows;
}

std::string format_csv_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 15);
  return std::string(buf, res.ptr);
}

double round_significant15(double value) {
  if (!std::isfinite(value)) return value;
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::scientific, 14);
  double out = value;
  std::from_chars(buf, res.ptr, out);
  return out;
}

nlohmann::json to_json(const PointSummary& s) {
  auto r = [](double v) { return number_or_null(round_significant15(v)); };
  return {{"alpha", r(s.alpha)},   {"m_c1", r(s.m_c1)},   {"R_c1", r(s.R_c1)},   {"rho_c1", r(s.rho_c1)},
          {"m_2", r(s.m_2)},       {"R_0", r(s.R_0)},     {"eps_0", r(s.eps_0)}, {"eps_1", r(s.eps_1)},
          {"m_eps0", r(s.m_eps0)}, {"m_eps1", r(s.m_eps1)}};
}

nlohmann::json to_json(const CrossingSummary& s) {
  return {{"alpha0", number_or_null(s.alpha0)},
          {"m_at_crossing", number_or_null(s.m_at_crossing)},
          {"tol", number_or_null(s.tol)}};
}

nlohmann::json to_json(const LedgerReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const LedgerCheck& c : report.checks) {
    const bool has_lower = c.relation == Relation::greater || c.relation == Relation::greater_equal ||
                           c.relation == Relation::within;
    const bool has_upper =
        c.relation == Relation::less || c.relation == Relation::less_equal || c.relation == Relation::within;
    checks.push_back({
        {"name", c.name},
        {"claim", c.claim},
        {"relation", relation_symbol(c.relation)},
        {"lower", has_lower ? number_or_null(c.lower) : nlohmann::json(nullptr)},
        {"upper", has_upper ? number_or_null(c.upper) : nlohmann::json(nullptr)},
        {"attained", number_or_null(c.attained)},
        {"bound", number_or_null(c.bound)},
        {"margin", number_or_null(c.margin)},
        {"worst_alpha", number_or_null(c.worst_alpha)},
        {"attained_min", number_or_null(c.attained_min)},
        {"attained_max", number_or_null(c.attained_max)},
        {"alpha_at_min", number_or_null(c.alpha_at_min)},
        {"alpha_at_max", number_or_null(c.alpha_at_max)},
        {"pass", c.pass},
    });
  }
  return {{"pass", report.pass()},
          {"grid_points", report.grid_points},
          {"alpha_max", report.alpha_max},
          {"eps_probe", report.eps_probe},
          {"r_probe", report.r_probe},
          {"checks", checks}};
}

void write_sweep(std::ostream& out, const std::vector<SweepRow>& rows, OutputFormat format) {
  if (format == OutputFormat::json) {
    nlohmann::json doc = nlohmann::json::array();
    for (const SweepRow& row : rows) {
      const ThresholdSample& s = row.sample;
      doc.push_back({{"alpha", number_or_null(s.alpha)},
                     {"m_c1", number_or_null(s.m_c1)},
                     {"m_2", number_or_null(s.m_2)},
                     {"m_eps0", number_or_null(s.m_eps0)},
                     {"m_eps1", number_or_null(s.m_eps1)}});
    }
    out << doc.dump(2) << '\n';
    return;
  }
  out << "alpha,m_c1,m_2,m_eps0,m_eps1\n";
  for (const SweepRow& row : rows) {
    const ThresholdSample& s = row.sample;
    out << format_csv_number(s.alpha) << ',' << format_csv_number(s.m_c1) << ',' << format_csv_number(s.m_2) << ','
        << format_csv_number(s.m_eps0) << ',' << format_csv_number(s.m_eps1) << '\n';
  }
}

void write_envelope(std::ostream& out, const std::vector<EnvelopeRow>& rows, OutputFormat format) {
  if (format == OutputFormat::json) {
    nlohmann::json doc = nlohmann::json::array();
    for (const EnvelopeRow& r : rows) {
      doc.push_back({{"R", r.R},
                     {"rho_1", r.rho_1},
                     {"rho_2", r.rho_2},
                     {"rho_3", r.rho_3},
                     {"rho_min", r.rho_min},
                     {"n_opt", r.n_opt}});
    }
    out << doc.dump(2) << '\n';
    return;
  }
  out << "R,rho_1,rho_2,rho_3,rho_min,n_opt\n";
  for (const EnvelopeRow& r : rows) {
    out << format_csv_number(r.R) << ',' << format_csv_number(r.rho_1) << ',' << format_csv_number(r.rho_2) << ','
        << format_csv_number(r.rho_3) << ',' << format_csv_number(r.rho_min) << ',' << std::to_string(r.n_opt)
        << '\n';
  }
}

}  // namespace rieszdrop
