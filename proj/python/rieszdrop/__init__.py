"""Thresholds of the planar liquid-drop problem with Riesz repulsion."""

from ._rieszdrop import (
    BisectionStart,
    Bracket,
    CrossingSummary,
    EnvelopePoint,
    EnvelopeSegment,
    LedgerCheck,
    LedgerConfig,
    LedgerReport,
    PointSummary,
    RootSolveConfig,
    SeriesConfig,
    ThresholdSample,
    annulus_width_bound,
    convexity_margin,
    convexity_threshold,
    critical_mass,
    crossing_exponent,
    crossover_cost,
    crossover_radius,
    deficit_bound,
    disk_energy,
    disk_potential,
    disk_potential_slope_max,
    energy_upper_bound,
    envelope_cost,
    envelope_segment,
    eps_of_mass,
    gamma,
    hyp2f1,
    ledger_json,
    mass_of_eps,
    nonexistence_cost,
    nonexistence_excess,
    nonexistence_mass,
    nonexistence_radius,
    potential_lower_bound,
    potential_upper_bound,
    rigidity_constant,
    rigidity_gap,
    rigidity_margin,
    rigidity_threshold,
    run_ledger,
    sample_thresholds,
    split_cost,
    split_cost_argmin,
    summarize_crossing,
    summarize_point,
    unit_disk_interaction,
)

__all__ = [name for name in dir() if not name.startswith("_")]
