import json
import math
import os
import subprocess
from pathlib import Path

import pytest

import rieszdrop as rd

SCHEMA_DIR = Path(os.environ.get("RIESZDROP_SCHEMA_DIR", Path(__file__).resolve().parents[2] / "schema"))
CLI = os.environ.get("RIESZDROP_CLI")


def test_special_functions():
    assert rd.gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-14)
    assert rd.hyp2f1(0.3, 0.4, 1.5, 0.0) == 1.0
    assert rd.disk_potential(0.0, 0.5) == pytest.approx(4 * math.pi / 3, rel=1e-14)
    assert rd.unit_disk_interaction(1.0) == pytest.approx(16 * math.pi / 3, rel=1e-14)


def test_thresholds():
    assert rd.critical_mass(0.0) == pytest.approx(2.051, abs=1e-3)
    r = rd.crossover_radius(1, 0.1)
    assert math.pi * r * r == pytest.approx(rd.critical_mass(0.1), rel=1e-12)
    assert rd.crossing_exponent() == pytest.approx(0.04273, abs=5e-4)
    s = rd.sample_thresholds(0.034)
    assert s.m_c1 < s.m_2 < min(s.m_eps0, s.m_eps1)


def test_envelope():
    p = rd.envelope_cost(2.0, 0.5)
    brute = min(rd.split_cost(n, 2.0, 0.5) for n in range(1, 101))
    assert p.value == pytest.approx(brute, rel=1e-12)
    seg = rd.envelope_segment(p.n_opt, 0.5)
    assert seg.r_lo < 2.0 <= seg.r_hi


def test_solver_observer_sees_sign_changes():
    starts = []
    cfg = rd.RootSolveConfig()
    cfg.on_start = starts.append
    rd.nonexistence_mass(0.02, cfg)
    assert len(starts) == 1
    assert starts[0].objective == "nonexistence_radius"
    assert starts[0].f_lo < 0 < starts[0].f_hi


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        rd.critical_mass(-1.0)
    with pytest.raises(ValueError):
        rd.nonexistence_mass(0.0)
    cfg = rd.RootSolveConfig()
    cfg.bracket = rd.Bracket(0.01, 0.03)
    with pytest.raises(RuntimeError):
        rd.crossing_exponent(cfg)
    tight = rd.SeriesConfig()
    tight.max_terms = 2
    with pytest.raises(RuntimeError):
        rd.hyp2f1(0.05, 0.05, 2.0, 0.5, tight)


def test_ledger():
    report = rd.run_ledger(threads=2)
    assert report.passed
    assert len(report.checks) == 18
    assert not rd.run_ledger(alpha_max=0.05).passed
    doc = json.loads(rd.ledger_json(report))
    assert doc["pass"] is True


def _validate(doc, schema_name):
    jsonschema = pytest.importorskip("jsonschema")
    schema = json.loads((SCHEMA_DIR / schema_name).read_text())
    jsonschema.Draft202012Validator(schema).validate(doc)


def test_ledger_json_matches_schema():
    _validate(json.loads(rd.ledger_json(rd.run_ledger(grid=10))), "ledger.schema.json")


@pytest.mark.skipif(CLI is None, reason="RIESZDROP_CLI not set")
@pytest.mark.parametrize(
    "args, schema",
    [
        (["eval", "--alpha", "0.034"], "eval.schema.json"),
        (["alpha0"], "alpha0.schema.json"),
        (["verify", "--grid", "50"], "ledger.schema.json"),
        (["sweep", "--alpha-min", "0.01", "--alpha-max", "0.04", "--steps", "4", "--format", "json"], "sweep.schema.json"),
        (["envelope", "--alpha", "0.1", "--steps", "5", "--format", "json"], "envelope.schema.json"),
    ],
)
def test_cli_json_validates(args, schema):
    out = subprocess.run([CLI, *args], check=True, capture_output=True, text=True).stdout
    _validate(json.loads(out), schema)


@pytest.mark.skipif(CLI is None, reason="RIESZDROP_CLI not set")
def test_cli_eval_agrees_with_module():
    out = subprocess.run([CLI, "eval", "--alpha", "0.034"], check=True, capture_output=True, text=True).stdout
    doc = json.loads(out)
    s = rd.summarize_point(0.034)
    assert doc["m_2"] == pytest.approx(s.m_2, rel=1e-14)
    assert doc["m_eps1"] == pytest.approx(s.m_eps1, rel=1e-14)
