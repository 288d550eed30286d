#!/usr/bin/env python3
"""
Tests for scenario configs, the builtin catalog, experiments, checks and CSV outputs
"""

import numpy as np
import pandas as pd
import pytest

from dynamics import Boundary, Interior
from phasespace import ActionError, ConfigError, SpectralSet
from scenarios import (
    Experiment,
    MoyalReport,
    PointNorm,
    RandomReport,
    RandomSample,
    SweepRow,
    ap_formula_spectrum,
    ap_reference_spectrum,
    builtin_catalog,
    builtin_config_text,
    builtin_names,
    check_ess,
    check_moyal,
    check_norm_profile,
    check_random,
    check_sweep,
    classical_range,
    load_scenario,
    load_scenario_file,
    norm_profile,
    parse_point,
    run_hbar_sweep,
    run_moyal_check,
    run_random_experiment,
    run_spectrum,
    scenario_to_config,
    write_moyal_csv,
    write_norms_csv,
    write_spectrum_csv,
    write_sweep_csv,
)
from spectra import EssentialSpectrumReport

TORUS = """
[action]
id = torus-ap
frequency = 1,0; 0,1

[symbol]
name = harper

[grid]
L = 4
N = 32
"""

QUANTUM_PLANE = """
[action]
id = real-quantum-plane

[symbol]
expr = tanh(x) + tanh(xi)

[grid]
L = 4
N = 32
"""

TRANSLATION = """
[action]
id = translation

[symbol]
expr = gaussian(x)*gaussian(xi)
partner = gaussian(x - 0.5)*gaussian(xi + 0.25)

[grid]
L = 6
N = 64

[run]
name = small-moyal
hbar = 1/4, 1/8
"""

VO_TIMES = """
[action]
id = vo-ap
frequency = 1,0; 0,1

[symbol]
name = vo-times-harper

[grid]
L = 4
N = 32
"""


# ---------------------------------------------------------------------------
# Config parsing
# ---------------------------------------------------------------------------

def test_minimal_config_gets_defaults():
    scenario = load_scenario(TORUS)
    assert scenario.name == "scenario"
    assert scenario.action == "torus-ap"
    assert scenario.action_params == {"frequency": [[1.0, 0.0], [0.0, 1.0]]}
    assert scenario.hbar_schedule == [1.0]
    assert scenario.experiments == [Experiment.SPECTRUM]
    assert scenario.seed == 7
    assert len(scenario.base_points) == 1
    assert isinstance(parse_point(scenario.base_points[0]), Boundary)


def test_run_section_is_parsed():
    text = TORUS + """
[run]
name = torus-small   # trailing comment
hbar = 1, 1/2, 1/4
base_points = torus(0,0); torus(1, 2)
experiments = spectrum, sweep
seed = 11
zeta = 0.5+0.25j
"""
    scenario = load_scenario(text)
    assert scenario.name == "torus-small"
    assert scenario.hbar_schedule == [1.0, 0.5, 0.25]
    assert scenario.working_hbar == 0.25
    assert scenario.base_points == ["torus(0,0)", "torus(1,2)"]
    assert scenario.experiments == [Experiment.SPECTRUM, Experiment.SWEEP]
    assert scenario.seed == 11
    assert scenario.zeta_value == 0.5 + 0.25j


def test_hbar_out_of_range_names_the_field():
    with pytest.raises(ConfigError) as info:
        load_scenario(TORUS + "\n[run]\nhbar = 2\n")
    assert info.value.field == "run.hbar"
    assert "hbar must be in (0,1]" in str(info.value)
    assert info.value.line is not None


def test_base_point_of_another_action_is_rejected():
    with pytest.raises(ConfigError) as info:
        load_scenario(QUANTUM_PLANE + "\n[run]\nbase_points = torus(0,0)\n")
    assert info.value.field == "run.base_points"


@pytest.mark.parametrize(
    "text,field,line",
    [
        ("[action]\nid = translation\ncolour = red\n", "action.colour", 3),
        ("[colours]\n", None, 1),
        ("id = translation\n", None, 1),
        ("[action]\nid = translation\nid = torus-ap\n", "action.id", 3),
        ("[action]\nid =\n", "action.id", 2),
        ("[action]\nid translation\n", None, 2),
    ],
)
def test_parse_errors_carry_line_numbers(text, field, line):
    with pytest.raises(ConfigError) as info:
        load_scenario(text)
    assert info.value.field == field
    assert info.value.line == line


def test_missing_required_key():
    with pytest.raises(ConfigError) as info:
        load_scenario("[action]\nid = translation\n[symbol]\nexpr = 1\n[grid]\nL = 4\n")
    assert info.value.field == "grid.N"


def test_field_validation_errors():
    with pytest.raises(ConfigError) as info:
        load_scenario(TORUS.replace("N = 32", "N = 48"))
    assert info.value.field == "grid.N"
    with pytest.raises(ConfigError):
        load_scenario(TORUS.replace("name = harper", "name = harper\nexpr = cos(x)"))
    with pytest.raises(ConfigError) as info:
        load_scenario(QUANTUM_PLANE.replace("tanh(x) + tanh(xi)", "tanh(x) +"))
    assert info.value.field == "symbol.expr"
    with pytest.raises(ConfigError) as info:
        load_scenario(TORUS.replace("1,0; 0,1", "1,1; 2,2"))
    assert info.value.field == "action.frequency"


def test_ladder_rungs_must_grow_in_both_L_and_N():
    assert load_scenario(QUANTUM_PLANE + "ladder = 4:32, 8:64\n").ladder == [(4.0, 32), (8.0, 64)]
    for ladder in ("4:32, 4:64", "4:32, 8:32", "8:64, 4:128"):
        with pytest.raises(ConfigError) as info:
            load_scenario(QUANTUM_PLANE + f"ladder = {ladder}\n")
        assert info.value.field == "grid.ladder"


def test_overrides():
    scenario = load_scenario(TORUS, overrides=["grid.N=64", "run.seed = 3", "run.hbar=1/2"])
    assert scenario.N == 64
    assert scenario.seed == 3
    assert scenario.hbar_schedule == [0.5]
    with pytest.raises(ConfigError):
        load_scenario(TORUS, overrides=["grid.M=64"])
    with pytest.raises(ConfigError):
        load_scenario(TORUS, overrides=["gridN"])


def test_missing_file_names_the_path(tmp_path):
    path = tmp_path / "absent.cfg"
    with pytest.raises(ConfigError) as info:
        load_scenario_file(path)
    assert str(path) in str(info.value)


def test_parse_point():
    assert parse_point("(1, -2)") == Interior.at(1, -2)
    assert parse_point("infinity(0.5)") == Boundary("infinity", (0.5,))
    assert parse_point("torus(pi,0)") == Boundary("torus", (pytest.approx(3.141592653589793), 0.0))
    for text in ("foo", "(1)", "(1,inf)", "(1,x)"):
        with pytest.raises(ConfigError):
            parse_point(text)


# ---------------------------------------------------------------------------
# Catalog
# ---------------------------------------------------------------------------

def test_catalog_has_every_builtin():
    names = builtin_names()
    assert names == sorted(names)
    assert len(names) == 9
    assert {"quantum-plane-grid", "torus-harper", "vo-radial-tanh", "moyal-gaussians"} <= set(names)
    entries = builtin_catalog()
    assert [entry.scenario.name for entry in entries] == names
    assert all(entry.expected and entry.tag for entry in entries)


def test_catalog_configs_render_back():
    for entry in builtin_catalog():
        assert load_scenario(scenario_to_config(entry.scenario)) == entry.scenario


def test_unknown_builtin():
    with pytest.raises(KeyError):
        builtin_config_text("no-such-scenario")


# ---------------------------------------------------------------------------
# Classical ranges and experiments
# ---------------------------------------------------------------------------

def test_classical_range_of_harper():
    scenario = load_scenario(TORUS)
    lo, hi = classical_range(scenario, Boundary("torus", (0.0, 0.0))).hull
    assert lo == pytest.approx(-2.0, abs=0.02)
    assert hi == pytest.approx(2.0, abs=0.02)


def test_classical_range_of_constant():
    scenario = load_scenario(TRANSLATION.replace("gaussian(x)*gaussian(xi)\n", "0.7\n"))
    assert list(classical_range(scenario, Interior.at(0, 0))) == pytest.approx([0.7])


def test_classical_range_at_quantum_plane_origin():
    scenario = load_scenario(QUANTUM_PLANE)
    assert list(classical_range(scenario, Interior.at(0, 0))) == pytest.approx([0.0])


def test_classical_range_needs_a_real_symbol():
    scenario = load_scenario(TORUS.replace("name = harper", "name = torus-monomial"))
    with pytest.raises(ConfigError):
        classical_range(scenario, Boundary("torus", (0.0, 0.0)))


def test_run_spectrum_per_base_point():
    scenario = load_scenario(TORUS, overrides=["run.base_points=torus(0,0); torus(1,2)"])
    results = run_spectrum(scenario)
    assert [r.point_id for r in results] == ["torus(0,0)", "torus(1,2)"]
    for r in results:
        assert len(r.spectrum) == 32
        assert r.hermitian_defect <= 1e-9
        lo, hi = r.spectrum.hull
        assert -2.0 - 1e-9 <= lo and hi <= 2.0 + 1e-9


def test_random_experiment_needs_two_points():
    scenario = load_scenario(TORUS)
    with pytest.raises(ConfigError) as info:
        run_random_experiment(scenario, count=1)
    assert "count ≥ 2 required" in str(info.value)


def test_random_experiment_needs_an_ergodic_action():
    with pytest.raises(ActionError):
        run_random_experiment(load_scenario(QUANTUM_PLANE), count=2)


def test_random_experiment_follows_the_seed():
    scenario = load_scenario(TORUS)
    first = run_random_experiment(scenario, count=3, seed=5)
    again = run_random_experiment(scenario, count=3, seed=5)
    assert [s.point for s in first.samples] == [s.point for s in again.samples]
    assert first.max_pairwise_d == again.max_pairwise_d
    assert first.seed == 5 and len(first.samples) == 3


def test_moyal_check_report():
    report = run_moyal_check(load_scenario(TRANSLATION))
    assert [N for N, _ in report.morphism_errors] == [64, 128]
    assert all(error <= 1e-3 for _, error in report.morphism_errors)
    assert [h for h, _ in report.remainders] == [0.25, 0.125]
    assert report.morphism_hbar == 1.0


def test_norm_profile_per_base_point():
    scenario = load_scenario(QUANTUM_PLANE, overrides=["run.base_points=(1,1); (0,0)"])
    profile = norm_profile(scenario)
    assert [p.point_id for p in profile] == [str(Interior.at(1, 1)), str(Interior.at(0, 0))]
    assert 0.0 < profile[0].norm <= 2.0 + 1e-9
    assert profile[1].norm == pytest.approx(0.0, abs=1e-12)


def test_ap_formula_spectrum_scales_the_reference():
    scenario = load_scenario(VO_TIMES)
    reference = ap_reference_spectrum("harper", 4.0, 32, 1.0, ((1.0, 0.0), (0.0, 1.0)))
    formula = ap_formula_spectrum(scenario)
    assert len(formula) == len(reference) == 32
    np.testing.assert_allclose(formula.values, 0.5 * reference.values, atol=1e-12)


def test_ap_formula_spectrum_shifts_the_reference():
    scenario = load_scenario(VO_TIMES.replace("vo-times-harper", "vo-plus-harper"))
    reference = ap_reference_spectrum("harper", 4.0, 32, 1.0, ((1.0, 0.0), (0.0, 1.0)))
    np.testing.assert_allclose(ap_formula_spectrum(scenario).values, 1.0 + reference.values, atol=1e-12)


def test_ap_formula_spectrum_only_for_vo_ap_products():
    assert ap_formula_spectrum(load_scenario(TORUS)) is None
    assert ap_formula_spectrum(load_scenario(QUANTUM_PLANE)) is None


def test_moyal_check_needs_translation_and_partner():
    with pytest.raises(ConfigError):
        run_moyal_check(load_scenario(QUANTUM_PLANE))
    with pytest.raises(ConfigError):
        run_moyal_check(load_scenario(TRANSLATION.replace("partner = gaussian(x - 0.5)*gaussian(xi + 0.25)\n", "")))


# ---------------------------------------------------------------------------
# Checks
# ---------------------------------------------------------------------------

def _rows(distances):
    empty = SpectralSet.of([0.0])
    return [SweepRow(hbar=2.0 ** -i, spectrum=empty, d_to_classical=d) for i, d in enumerate(distances)]


def test_check_sweep():
    assert check_sweep(_rows([0.5, 0.2, 0.05])) == []
    failures = check_sweep(_rows([0.5, 0.2, 0.25]))
    assert len(failures) == 2
    assert any("rose" in f for f in failures)


def test_check_moyal():
    good = MoyalReport(
        morphism_hbar=1.0,
        morphism_errors=[(64, 1e-5), (128, 1e-6)],
        remainders=[(0.25, 4e-3), (0.125, 1e-3), (0.0625, 2.5e-4)],
    )
    assert good.halving_ratios == pytest.approx([4.0, 4.0])
    assert check_moyal(good) == []
    bad = good.model_copy(update={"remainders": [(0.25, 4e-3), (0.125, 2e-3)]})
    assert len(check_moyal(bad)) == 1


def test_check_random():
    report = RandomReport(
        seed=7,
        hbar=1.0,
        samples=[
            RandomSample(sample_id=0, point="torus(0,0)", max_pairwise_d=0.01),
            RandomSample(sample_id=1, point="torus(1,2)", max_pairwise_d=0.2, isolated=[0.5]),
        ],
    )
    assert report.max_pairwise_d == 0.2
    assert len(check_random(report)) == 2


def test_check_ess_against_a_closed_form():
    spectrum = SpectralSet.of([-1.0, 0.0, 1.0])
    report = EssentialSpectrumReport(predicted=spectrum, numerical=spectrum, hausdorff_distance=0.0)
    assert check_ess(report) == []
    assert check_ess(report, reference=spectrum) == []
    failures = check_ess(report, reference=SpectralSet.of([-0.5, 0.5, 1.5]))
    assert len(failures) == 1
    assert "closed form" in failures[0]


def test_check_norm_profile():
    profile = [PointNorm(point_id="(1,1)", norm=0.995), PointNorm(point_id="(0,0)", norm=1.0)]
    assert check_norm_profile(profile) == []
    failures = check_norm_profile([PointNorm(point_id="(1,1)", norm=0.9), profile[1]])
    assert len(failures) == 1
    assert "(1,1)" in failures[0]


# ---------------------------------------------------------------------------
# Outputs
# ---------------------------------------------------------------------------

def test_spectrum_csv_is_deterministic(tmp_path):
    scenario = load_scenario(TORUS)
    first = write_spectrum_csv(run_spectrum(scenario), tmp_path / "a" / "spectrum.csv")
    second = write_spectrum_csv(run_spectrum(scenario), tmp_path / "b" / "spectrum.csv")
    assert first.read_bytes() == second.read_bytes()
    table = pd.read_csv(first)
    assert list(table.columns) == ["point_id", "value"]
    assert len(table) == 32
    assert b"\r\n" not in first.read_bytes()


def test_sweep_csv(tmp_path):
    scenario = load_scenario(TORUS, overrides=["run.hbar=1, 1/2"])
    rows = run_hbar_sweep(scenario, Boundary("torus", (0.0, 0.0)))
    assert [r.hbar for r in rows] == [1.0, 0.5]
    written = write_sweep_csv(rows, tmp_path / "sweep.csv")
    assert [p.name for p in written] == ["sweep.csv"]
    table = pd.read_csv(written[0])
    assert list(table.columns) == ["hbar", "d_to_classical", "n_eigenvalues", "runtime_ms"]
    assert list(table["runtime_ms"]) == [0, 0]
    assert list(table["n_eigenvalues"]) == [32, 32]


def test_sweep_detail_csv_with_resolvent(tmp_path):
    scenario = load_scenario(TORUS, overrides=["run.zeta=0.5+1j"])
    rows = run_hbar_sweep(scenario, Boundary("torus", (0.0, 0.0)))
    assert rows[0].resolvent_norm is not None and rows[0].resolvent_norm <= 1.0 + 1e-12
    written = write_sweep_csv(rows, tmp_path / "sweep.csv")
    assert [p.name for p in written] == ["sweep.csv", "sweep_detail.csv"]


def test_moyal_csv(tmp_path):
    report = MoyalReport(morphism_hbar=1.0, morphism_errors=[(64, 1e-5), (128, 1e-6)], remainders=[(0.25, 4e-3)])
    table = pd.read_csv(write_moyal_csv(report, tmp_path / "moyal.csv"))
    assert list(table.columns) == ["check", "parameter", "value"]
    assert list(table["check"]) == ["morphism_relative_error"] * 2 + ["expansion_remainder"]


def test_norms_csv(tmp_path):
    profile = [PointNorm(point_id="(1,1)", norm=1.0), PointNorm(point_id="(0,0)", norm=0.25)]
    table = pd.read_csv(write_norms_csv(profile, tmp_path / "norms.csv"))
    assert list(table.columns) == ["point_id", "norm"]
    assert list(table["norm"]) == [1.0, 0.25]
