#!/usr/bin/env python3
"""
Tests for the orbitspec command line: catalog, runs, outputs and exit codes
"""

import importlib

import pandas as pd
import pytest
from click.testing import CliRunner

from cli import CliInvocation, Subcommand, dispatch, exit_code_for, main
from cli.main import cli
from phasespace import AcceptanceError, ConfigError, NumericalError, SymbolSyntaxError
from scenarios import builtin_catalog, builtin_names, load_scenario_file

cli_module = importlib.import_module("cli.main")

TINY_TORUS = """
[action]
id = torus-ap
frequency = 1,0; 0,1

[symbol]
name = harper

[grid]
L = 4
N = 32

[run]
name = {name}
hbar = 1, 1/2
base_points = torus(0,0); torus(1,2)
experiments = spectrum, sweep, random
count = 3
"""


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def tiny_config(tmp_path):
    path = tmp_path / "tiny.cfg"
    path.write_text(TINY_TORUS.format(name="tiny-torus"), encoding="utf-8")
    return path


# ---------------------------------------------------------------------------
# Catalog
# ---------------------------------------------------------------------------

def test_catalog_lists_every_builtin(runner):
    result = runner.invoke(cli, ["catalog"])
    assert result.exit_code == 0
    lines = [line for line in result.output.splitlines() if line.strip()]
    assert len(lines) == 9
    assert [line.split()[0] for line in lines] == builtin_names()
    plane = next(line for line in lines if line.startswith("quantum-plane-grid"))
    assert "real quantum plane" in plane
    radial = next(line for line in lines if line.startswith("vo-radial-tanh"))
    assert "asymptotic range" in radial


def test_catalog_export(runner, tmp_path):
    target = tmp_path / "cfg"
    result = runner.invoke(cli, ["catalog", "--export", str(target)])
    assert result.exit_code == 0
    assert "Exported 9 scenarios" in result.output
    for entry in builtin_catalog():
        assert load_scenario_file(target / f"{entry.scenario.name}.cfg") == entry.scenario


# ---------------------------------------------------------------------------
# Runs and outputs
# ---------------------------------------------------------------------------

def test_run_writes_every_experiment(runner, tiny_config, tmp_path):
    out = tmp_path / "out"
    result = runner.invoke(cli, ["run", "--config", str(tiny_config), "--out", str(out)])
    assert result.exit_code == 0, result.output
    assert "tiny-torus" in result.output
    written = sorted(p.name for p in (out / "tiny-torus").iterdir())
    assert written == ["random.csv", "spectrum.csv", "sweep.csv"]
    assert list(pd.read_csv(out / "tiny-torus" / "random.csv").columns) == [
        "sample_id", "max_pairwise_d", "n_isolated",
    ]


def test_same_config_and_seed_give_identical_files(runner, tiny_config, tmp_path):
    for name in ("first", "second"):
        args = ["run", "--config", str(tiny_config), "--out", str(tmp_path / name), "--seed", "3"]
        result = runner.invoke(cli, args)
        assert result.exit_code == 0, result.output
    first = sorted((tmp_path / "first" / "tiny-torus").iterdir())
    second = sorted((tmp_path / "second" / "tiny-torus").iterdir())
    assert [p.name for p in first] == [p.name for p in second]
    for a, b in zip(first, second):
        assert a.read_bytes() == b.read_bytes()


def test_subcommand_runs_one_experiment(runner, tiny_config, tmp_path):
    out = tmp_path / "out"
    result = runner.invoke(cli, ["spectrum", "--config", str(tiny_config), "--out", str(out), "--dump-matrix"])
    assert result.exit_code == 0, result.output
    written = sorted(p.name for p in (out / "tiny-torus").iterdir())
    assert written == ["matrix_0.csv", "matrix_1.csv", "spectrum.csv"]
    assert pd.read_csv(out / "tiny-torus" / "matrix_0.csv", header=None).shape == (32, 64)


def test_norms_subcommand_writes_one_row_per_base_point(runner, tiny_config, tmp_path):
    out = tmp_path / "out"
    result = runner.invoke(cli, ["norms", "--config", str(tiny_config), "--out", str(out)])
    assert result.exit_code == 0, result.output
    assert sorted(p.name for p in (out / "tiny-torus").iterdir()) == ["norms.csv"]
    table = pd.read_csv(out / "tiny-torus" / "norms.csv")
    assert list(table.columns) == ["point_id", "norm"]
    assert list(table["point_id"]) == ["torus(0,0)", "torus(1,2)"]
    assert all(0.0 < n <= 2.0 + 1e-9 for n in table["norm"])


def test_overrides_and_parallel_jobs(runner, tmp_path):
    paths = []
    for name in ("left", "right"):
        path = tmp_path / f"{name}.cfg"
        path.write_text(TINY_TORUS.format(name=name), encoding="utf-8")
        paths.append(path)
    out = tmp_path / "out"
    args = ["spectrum", "--out", str(out), "--jobs", "2", "--set", "grid.N=16"]
    for path in paths:
        args += ["--config", str(path)]
    result = runner.invoke(cli, args)
    assert result.exit_code == 0, result.output
    for name in ("left", "right"):
        assert len(pd.read_csv(out / name / "spectrum.csv")) == 2 * 16


# ---------------------------------------------------------------------------
# Exit codes
# ---------------------------------------------------------------------------

def test_missing_config_is_invalid_input(runner, tmp_path):
    path = tmp_path / "missing.cfg"
    result = runner.invoke(cli, ["spectrum", "--config", str(path)])
    assert result.exit_code == 1
    assert "missing.cfg" in result.output


@pytest.mark.parametrize(
    "args",
    [
        ["spectrum"],
        ["spectrum", "--scenario", "no-such-scenario"],
        ["spectrum", "--scenario", "torus-harper", "--scenario", "torus-harper"],
        ["spectrum", "--scenario", "torus-harper", "--set", "grid.M=3"],
        ["spectrum", "--scenario", "torus-harper", "--jobs", "0"],
    ],
)
def test_invalid_invocations(runner, args):
    result = runner.invoke(cli, args)
    assert result.exit_code == 1
    assert "Error" in result.output


def test_usage_errors_exit_with_one():
    assert main(["no-such-command"]) == 1
    assert main(["spectrum", "--jobs", "many"]) == 1


def test_main_returns_zero_on_success():
    assert main(["catalog"]) == 0


def test_failed_check_exits_with_three(runner, tiny_config, tmp_path, monkeypatch):
    monkeypatch.setattr(cli_module, "check_spectrum", lambda results: ["hermitian defect too large"])
    result = runner.invoke(cli, ["spectrum", "--config", str(tiny_config), "--out", str(tmp_path), "--check"])
    assert result.exit_code == 3
    assert "tiny-torus: hermitian defect too large" in result.output


def test_passing_check_exits_with_zero(runner, tiny_config, tmp_path):
    result = runner.invoke(cli, ["spectrum", "--config", str(tiny_config), "--out", str(tmp_path), "--check"])
    assert result.exit_code == 0, result.output


def test_numerical_failure_exits_with_two(tiny_config, tmp_path, monkeypatch):
    def broken(scenario, progress=False):
        raise NumericalError("eigen-solver residual too large")

    monkeypatch.setattr(cli_module, "run_spectrum", broken)
    inv = CliInvocation(Subcommand.SPECTRUM, config_paths=[str(tiny_config)], out_dir=str(tmp_path))
    assert dispatch(inv) == 2


def test_unexpected_failure_exits_with_two(tiny_config, tmp_path, monkeypatch):
    def broken(scenario, progress=False):
        raise RuntimeError("boom")

    monkeypatch.setattr(cli_module, "run_spectrum", broken)
    inv = CliInvocation(Subcommand.SPECTRUM, config_paths=[str(tiny_config)], out_dir=str(tmp_path))
    assert dispatch(inv) == 2


def test_exit_code_mapping():
    assert exit_code_for(AcceptanceError(["x"])) == 3
    assert exit_code_for(NumericalError("x")) == 2
    assert exit_code_for(ConfigError("x")) == 1
    assert exit_code_for(SymbolSyntaxError(0, "x")) == 1
    assert exit_code_for(FileNotFoundError("x")) == 1
    assert exit_code_for(ValueError("x")) == 2


def test_invocation_defaults():
    inv = CliInvocation("sweep", seed=5, overrides=["grid.N=64"], verbosity=7)
    assert inv.subcommand == Subcommand.SWEEP
    assert inv.verbosity == 2
    assert inv.effective_overrides == ["grid.N=64", "run.seed=5"]
    assert CliInvocation("run").effective_overrides == []
