// rieszdrop: thresholds of the planar liquid-drop problem with a Riesz
// repulsion |x - y|^-alpha.
//
//   rieszdrop eval     --alpha A
//   rieszdrop sweep    --alpha-min A --alpha-max B --steps N [--format csv|json] [--out FILE]
//   rieszdrop envelope --alpha A --r-max R --steps N [--format csv|json] [--out FILE]
//   rieszdrop alpha0   [--tol T]
//   rieszdrop verify   [--alpha-max A] [--grid N] [--eps-probe E] [--r-probe R]
//
// Exit codes: 0 success, 1 usage/domain/solver error, 2 ledger check
// failed, 3 sweep finished with failed rows.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rieszdrop/report.hpp"

namespace {

using namespace rieszdrop;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitLedgerFailed = 2;
constexpr int kExitPartial = 3;

unsigned threads_from_env() {
  const char* raw = std::getenv("RIESZDROP_THREADS");
  if (raw == nullptr || *raw == '\0') return 0;
  try {
    const long v = std::stol(raw);
    return v > 0 ? static_cast<unsigned>(v) : 0u;
  } catch (const std::exception&) {
    return 0;
  }
}

// Writes `body` to --out or stdout.
template <class Writer>
void emit(const std::string& out_path, Writer&& body) {
  if (out_path.empty()) {
    body(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file " + out_path);
  body(file);
  if (!file) throw std::runtime_error("failed writing " + out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thresholds of the planar liquid-drop problem with Riesz repulsion"};
  app.require_subcommand(1);

  double alpha = 0.0;
  double alpha_min = 0.0;
  double alpha_max = 0.034;
  int steps = 81;
  double r_max = 3.0;
  int grid = 1000;
  double eps_probe = 0.846;
  double r_probe = 0.945;
  double tol = 1e-12;
  std::string out_path;
  std::string format_name = "csv";
  const std::map<std::string, OutputFormat> formats{{"csv", OutputFormat::csv}, {"json", OutputFormat::json}};

  auto* eval = app.add_subcommand("eval", "All thresholds at one alpha (JSON)");
  eval->add_option("--alpha", alpha, "Riesz exponent, 0 < alpha <= 0.5")->required();
  eval->add_option("--tol", tol, "Relative root tolerance");
  eval->add_option("--out", out_path, "Output file (default stdout)");

  auto* sweep = app.add_subcommand("sweep", "Mass curves m_c1, m_2, m(eps0), m(eps1) over an alpha grid");
  sweep->add_option("--alpha-min", alpha_min)->required();
  sweep->add_option("--alpha-max", alpha_max)->required();
  sweep->add_option("--steps", steps, "Grid points, endpoints included")->required();
  sweep->add_option("--format", format_name)->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--tol", tol, "Relative root tolerance");
  sweep->add_option("--out", out_path, "Output file (default stdout)");

  auto* envelope = app.add_subcommand("envelope", "Per-area costs rho_1..rho_3 and their lower envelope");
  envelope->add_option("--alpha", alpha, "Riesz exponent, 0 < alpha <= 1")->required();
  envelope->add_option("--r-max", r_max, "Largest radius");
  envelope->add_option("--steps", steps, "Number of radii");
  envelope->add_option("--format", format_name)->check(CLI::IsMember({"csv", "json"}));
  envelope->add_option("--out", out_path, "Output file (default stdout)");

  auto* alpha0 = app.add_subcommand("alpha0", "Crossing exponent of m_2 with min(m(eps0), m(eps1)) (JSON)");
  alpha0->add_option("--tol", tol, "Relative root tolerance");
  alpha0->add_option("--out", out_path, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Grid check of the inequality ledger (JSON); exit 2 on failure");
  verify->add_option("--alpha-max", alpha_max, "Largest alpha checked");
  verify->add_option("--grid", grid, "Uniform grid points in (0, alpha-max]");
  verify->add_option("--eps-probe", eps_probe);
  verify->add_option("--r-probe", r_probe);
  verify->add_option("--tol", tol, "Relative root tolerance");
  verify->add_option("--out", out_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  const unsigned threads = threads_from_env();
  RootSolveConfig solve;
  solve.rel_tol = tol;

  try {
    if (*eval) {
      const PointSummary s = summarize_point(alpha, solve);
      emit(out_path, [&](std::ostream& os) { os << to_json(s).dump(2) << '\n'; });
      return kExitOk;
    }
    if (*sweep) {
      const SweepSpec spec{alpha_min, alpha_max, steps, formats.at(format_name)};
      const auto rows = run_sweep(spec, solve, threads);
      emit(out_path, [&](std::ostream& os) { write_sweep(os, rows, spec.format); });
      for (const auto& row : rows) {
        if (!row.ok) {
          std::cerr << "rieszdrop: sweep row at alpha = " << row.sample.alpha << " failed; wrote nan\n";
          return kExitPartial;
        }
      }
      return kExitOk;
    }
    if (*envelope) {
      const auto rows = envelope_table(alpha, r_max, steps);
      emit(out_path, [&](std::ostream& os) { write_envelope(os, rows, formats.at(format_name)); });
      return kExitOk;
    }
    if (*alpha0) {
      const CrossingSummary s = summarize_crossing(solve);
      emit(out_path, [&](std::ostream& os) { os << to_json(s).dump(2) << '\n'; });
      return kExitOk;
    }
    if (*verify) {
      LedgerConfig cfg;
      cfg.alpha_max = alpha_max;
      cfg.grid = grid;
      cfg.eps_probe = eps_probe;
      cfg.r_probe = r_probe;
      cfg.threads = threads;
      cfg.solve = solve;
      const LedgerReport report = run_ledger(cfg);
      emit(out_path, [&](std::ostream& os) { os << to_json(report).dump(2) << '\n'; });
      return report.pass() ? kExitOk : kExitLedgerFailed;
    }
  } catch (const std::exception& e) {
    std::cerr << "rieszdrop: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
