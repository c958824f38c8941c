#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rieszdrop/errors.hpp"
#include "rieszdrop/report.hpp"
#include "rieszdrop/specfun.hpp"
#include "rieszdrop/splitting.hpp"
#include "rieszdrop/thresholds.hpp"
#include "rieszdrop/verify.hpp"

namespace py = pybind11;
using namespace rieszdrop;

PYBIND11_MODULE(_rieszdrop, m) {
  m.doc() = "Thresholds of the planar liquid-drop problem with Riesz repulsion";

  // DomainError derives from std::domain_error -> ValueError,
  // SolverError from std::runtime_error -> RuntimeError.

  py::class_<SeriesConfig>(m, "SeriesConfig")
      .def(py::init<>())
      .def_readwrite("rel_term_tol", &SeriesConfig::rel_term_tol)
      .def_readwrite("max_terms", &SeriesConfig::max_terms);

  py::class_<Bracket>(m, "Bracket")
      .def(py::init<>())
      .def(py::init([](double lo, double hi) { return Bracket{lo, hi}; }), py::arg("lo"), py::arg("hi"))
      .def_readwrite("lo", &Bracket::lo)
      .def_readwrite("hi", &Bracket::hi);

  py::class_<BisectionStart>(m, "BisectionStart")
      .def_readonly("objective", &BisectionStart::objective)
      .def_readonly("bracket", &BisectionStart::bracket)
      .def_readonly("f_lo", &BisectionStart::f_lo)
      .def_readonly("f_hi", &BisectionStart::f_hi);

  py::class_<RootSolveConfig>(m, "RootSolveConfig")
      .def(py::init<>())
      .def_readwrite("bracket", &RootSolveConfig::bracket)
      .def_readwrite("rel_tol", &RootSolveConfig::rel_tol)
      .def_readwrite("max_iter", &RootSolveConfig::max_iter)
      .def_readwrite("max_expansions", &RootSolveConfig::max_expansions)
      .def_readwrite("on_start", &RootSolveConfig::on_start);

  m.def("gamma", &rieszdrop::gamma, py::arg("x"));
  m.def("hyp2f1", &hyp2f1, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("z"),
        py::arg("cfg") = SeriesConfig{});
  m.def("disk_potential", &disk_potential, py::arg("r"), py::arg("alpha"), py::arg("cfg") = SeriesConfig{});
  m.def("disk_potential_slope_max", &disk_potential_slope_max, py::arg("alpha"));

  py::class_<EnvelopeSegment>(m, "EnvelopeSegment")
      .def_readonly("n", &EnvelopeSegment::n)
      .def_readonly("r_lo", &EnvelopeSegment::r_lo)
      .def_readonly("r_hi", &EnvelopeSegment::r_hi);
  py::class_<EnvelopePoint>(m, "EnvelopePoint")
      .def_readonly("value", &EnvelopePoint::value)
      .def_readonly("n_opt", &EnvelopePoint::n_opt);

  m.def("unit_disk_interaction", &unit_disk_interaction, py::arg("alpha"));
  m.def("disk_energy", &disk_energy, py::arg("radius"), py::arg("alpha"));
  m.def("split_cost", &split_cost, py::arg("n"), py::arg("radius"), py::arg("alpha"));
  m.def("crossover_radius", &crossover_radius, py::arg("n"), py::arg("alpha"));
  m.def("crossover_cost", &crossover_cost, py::arg("n"), py::arg("alpha"));
  m.def("split_cost_argmin", &split_cost_argmin, py::arg("n"), py::arg("alpha"));
  m.def("envelope_segment", &envelope_segment, py::arg("n"), py::arg("alpha"));
  m.def("envelope_cost", &envelope_cost, py::arg("radius"), py::arg("alpha"),
        py::arg("max_split") = kDefaultMaxSplit);
  m.def("energy_upper_bound", &energy_upper_bound, py::arg("mass"), py::arg("alpha"));

  const RootSolveConfig default_solve{};
  m.def("critical_mass", &critical_mass, py::arg("alpha"));
  m.def("nonexistence_cost", &nonexistence_cost, py::arg("radius"), py::arg("alpha"));
  m.def("nonexistence_radius", &nonexistence_radius, py::arg("alpha"), py::arg("cfg") = default_solve);
  m.def("nonexistence_mass", &nonexistence_mass, py::arg("alpha"), py::arg("cfg") = default_solve);
  m.def("deficit_bound", &deficit_bound, py::arg("alpha"), py::arg("eps"));
  m.def("potential_lower_bound", &potential_lower_bound, py::arg("alpha"), py::arg("eps"));
  m.def("potential_upper_bound", &potential_upper_bound, py::arg("alpha"));
  m.def("rigidity_constant", &rigidity_constant, py::arg("alpha"), py::arg("eps"));
  m.def("annulus_width_bound", &annulus_width_bound, py::arg("deficit"));
  m.def("convexity_margin", &convexity_margin, py::arg("alpha"), py::arg("eps"));
  m.def("rigidity_margin", &rigidity_margin, py::arg("alpha"), py::arg("eps"));
  m.def("convexity_threshold", &convexity_threshold, py::arg("alpha"), py::arg("cfg") = default_solve);
  m.def("rigidity_threshold", &rigidity_threshold, py::arg("alpha"), py::arg("cfg") = default_solve);
  m.def("mass_of_eps", &mass_of_eps, py::arg("eps"), py::arg("alpha"));
  m.def("eps_of_mass", &eps_of_mass, py::arg("mass"), py::arg("alpha"));
  m.def("rigidity_gap", &rigidity_gap, py::arg("alpha"), py::arg("cfg") = default_solve);
  m.def("crossing_exponent", &crossing_exponent, py::arg("cfg") = default_solve);

  py::class_<ThresholdSample>(m, "ThresholdSample")
      .def_readonly("alpha", &ThresholdSample::alpha)
      .def_readonly("m_c1", &ThresholdSample::m_c1)
      .def_readonly("m_2", &ThresholdSample::m_2)
      .def_readonly("m_eps0", &ThresholdSample::m_eps0)
      .def_readonly("m_eps1", &ThresholdSample::m_eps1);
  m.def("sample_thresholds", &sample_thresholds, py::arg("alpha"), py::arg("cfg") = default_solve);

  m.def("nonexistence_excess", &nonexistence_excess, py::arg("alpha"), py::arg("radius"));

  py::class_<LedgerCheck>(m, "LedgerCheck")
      .def_readonly("name", &LedgerCheck::name)
      .def_readonly("claim", &LedgerCheck::claim)
      .def_property_readonly("relation", [](const LedgerCheck& c) { return std::string(relation_symbol(c.relation)); })
      .def_readonly("attained", &LedgerCheck::attained)
      .def_readonly("bound", &LedgerCheck::bound)
      .def_readonly("margin", &LedgerCheck::margin)
      .def_readonly("worst_alpha", &LedgerCheck::worst_alpha)
      .def_readonly("passed", &LedgerCheck::pass);

  py::class_<LedgerConfig>(m, "LedgerConfig")
      .def(py::init<>())
      .def_readwrite("alpha_max", &LedgerConfig::alpha_max)
      .def_readwrite("eps_probe", &LedgerConfig::eps_probe)
      .def_readwrite("r_probe", &LedgerConfig::r_probe)
      .def_readwrite("grid", &LedgerConfig::grid)
      .def_readwrite("threads", &LedgerConfig::threads)
      .def_readwrite("solve", &LedgerConfig::solve);

  py::class_<LedgerReport>(m, "LedgerReport")
      .def_readonly("checks", &LedgerReport::checks)
      .def_readonly("grid_points", &LedgerReport::grid_points)
      .def_readonly("alpha_max", &LedgerReport::alpha_max)
      .def_readonly("eps_probe", &LedgerReport::eps_probe)
      .def_readonly("r_probe", &LedgerReport::r_probe)
      .def_property_readonly("passed", &LedgerReport::pass);

  m.def(
      "run_ledger",
      [](double alpha_max, double eps_probe, double r_probe, int grid, unsigned threads) {
        LedgerConfig cfg;
        cfg.alpha_max = alpha_max;
        cfg.eps_probe = eps_probe;
        cfg.r_probe = r_probe;
        cfg.grid = grid;
        cfg.threads = threads;
        py::gil_scoped_release release;
        return run_ledger(cfg);
      },
      py::arg("alpha_max") = 0.034, py::arg("eps_probe") = 0.846, py::arg("r_probe") = 0.945,
      py::arg("grid") = 1000, py::arg("threads") = 1u);
  m.def(
      "ledger_json", [](const LedgerReport& r) { return to_json(r).dump(2); }, py::arg("report"));

  py::class_<PointSummary>(m, "PointSummary")
      .def_readonly("alpha", &PointSummary::alpha)
      .def_readonly("m_c1", &PointSummary::m_c1)
      .def_readonly("R_c1", &PointSummary::R_c1)
      .def_readonly("rho_c1", &PointSummary::rho_c1)
      .def_readonly("m_2", &PointSummary::m_2)
      .def_readonly("R_0", &PointSummary::R_0)
      .def_readonly("eps_0", &PointSummary::eps_0)
      .def_readonly("eps_1", &PointSummary::eps_1)
      .def_readonly("m_eps0", &PointSummary::m_eps0)
      .def_readonly("m_eps1", &PointSummary::m_eps1);
  m.def("summarize_point", &summarize_point, py::arg("alpha"), py::arg("cfg") = default_solve);

  py::class_<CrossingSummary>(m, "CrossingSummary")
      .def_readonly("alpha0", &CrossingSummary::alpha0)
      .def_readonly("m_at_crossing", &CrossingSummary::m_at_crossing)
      .def_readonly("tol", &CrossingSummary::tol);
  m.def("summarize_crossing", &summarize_crossing, py::arg("cfg") = default_solve);
}
