#!/usr/bin/env python3
"""
Acceptance-scale runs of the builtin scenarios (N = 512, truncation ladders)

All of these are marked slow; run them with pytest -m slow.
"""

import numpy as np
import pytest

from dynamics import Boundary, Interior, TranslationAction, expression_symbol, pullback_symbol
from phasespace import make_grid
from scenarios import (
    ap_formula_spectrum,
    builtin_config_text,
    check_ess,
    check_norm_profile,
    check_random,
    check_sweep,
    hamiltonian,
    load_scenario,
    norm_profile,
    run_ess,
    run_hbar_sweep,
    run_random_experiment,
    write_random_csv,
)
from spectra import eigen_spectrum, hausdorff
from weyl import build_op_matrix


def builtin(name):
    return load_scenario(builtin_config_text(name))


@pytest.mark.slow
def test_translated_symbol_has_the_same_spectrum():
    f = expression_symbol("gaussian(x)*gaussian(xi)")
    a = TranslationAction()
    distances = []
    for L in (12, 24):
        grid = make_grid(L, 512)
        original = eigen_spectrum(build_op_matrix(pullback_symbol(f, a, Interior.at(0, 0)), grid, 1.0))
        shifted = eigen_spectrum(build_op_matrix(pullback_symbol(f, a, Interior.at(1, 0)), grid, 1.0))
        distances.append(hausdorff(original, shifted))
    assert distances[0] <= 5e-2
    assert distances[1] <= distances[0] + 1e-9


@pytest.mark.slow
def test_quantum_plane_semi_axis_spectrum_sits_inside_the_quarter():
    scenario = builtin("quantum-plane-grid")
    quarter = eigen_spectrum(hamiltonian(scenario, Interior.at(1, 1))).values
    semi_axis = eigen_spectrum(hamiltonian(scenario, Interior.at(1, 0))).values
    nearest = np.min(np.abs(semi_axis[:, None] - quarter[None, :]), axis=1)
    assert nearest.max() <= 5e-2


@pytest.mark.slow
@pytest.mark.parametrize(
    "name", ["quantum-plane-grid", "vo-times-ap", "vo-plus-ap", "vo-tensor-vo-tanh", "vo-radial-tanh"]
)
def test_builtin_essential_spectrum_passes_its_check(name):
    scenario = builtin(name)
    assert check_ess(run_ess(scenario), reference=ap_formula_spectrum(scenario)) == []


@pytest.mark.slow
def test_torus_random_experiment_is_equispectral_and_reproducible(tmp_path):
    scenario = builtin("torus-harper")
    report = run_random_experiment(scenario, count=5)
    assert len(report.samples) == 5
    assert check_random(report) == []
    again = run_random_experiment(scenario, count=5)
    first = write_random_csv(report, tmp_path / "a" / "random.csv")
    second = write_random_csv(again, tmp_path / "b" / "random.csv")
    assert first.read_bytes() == second.read_bytes()


@pytest.mark.slow
def test_torus_sweep_approaches_the_classical_range():
    scenario = builtin("torus-harper")
    rows = run_hbar_sweep(scenario, Boundary("torus", (0.0, 0.0)))
    assert [row.hbar for row in rows] == sorted(scenario.hbar_schedule, reverse=True)
    assert check_sweep(rows) == []
    assert rows[-1].d_to_classical <= 0.1


@pytest.mark.slow
def test_quantum_plane_norm_is_attained_on_the_quarter():
    profile = norm_profile(builtin("quantum-plane-grid"))
    assert profile[-1].norm == pytest.approx(1.0, abs=1e-9)
    assert check_norm_profile(profile) == []
