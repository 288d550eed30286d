#!/usr/bin/env python3
"""
orbitspec command line

Usage:
    orbitspec run --config torus-harper.cfg --seed 7
    orbitspec sweep --scenario torus-harper --check
    orbitspec ess --scenario vo-radial-tanh --set grid.N=512 -v
    orbitspec catalog --export scenarios/

Exit codes: 0 success, 1 invalid input (config, symbol, grid, action, I/O),
2 numerical failure, 3 acceptance check failed under --check.
"""

import logging
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from functools import partial
from pathlib import Path
from typing import List, Optional, Sequence

import click

from config import settings
from phasespace import AcceptanceError, ConfigError, NumericalError, OrbitSpecError
from scenarios import (
    Experiment,
    Scenario,
    ap_formula_spectrum,
    base_points,
    builtin_catalog,
    builtin_config_text,
    builtin_names,
    check_ess,
    check_moyal,
    check_norm_profile,
    check_random,
    check_spectrum,
    check_sweep,
    hamiltonian,
    load_scenario,
    load_scenario_file,
    norm_profile,
    run_ess,
    run_hbar_sweep,
    run_moyal_check,
    run_random_experiment,
    run_spectrum,
    scenario_to_config,
    write_ess_csv,
    write_moyal_csv,
    write_norms_csv,
    write_random_csv,
    write_spectrum_csv,
    write_sweep_csv,
)
from weyl import dump_matrix_csv

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_NUMERICAL = 2
EXIT_ACCEPTANCE = 3

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
LOG_LEVELS = {0: logging.WARNING, 1: logging.INFO, 2: logging.DEBUG}


class Subcommand(str, Enum):
    RUN = "run"
    SPECTRUM = "spectrum"
    ESS = "ess"
    SWEEP = "sweep"
    RANDOM = "random"
    MOYAL_CHECK = "moyal-check"
    NORMS = "norms"
    CATALOG = "catalog"


# Subcommands that run a single experiment regardless of run.experiments
SUBCOMMAND_EXPERIMENT = {
    Subcommand.SPECTRUM: Experiment.SPECTRUM,
    Subcommand.ESS: Experiment.ESS,
    Subcommand.SWEEP: Experiment.SWEEP,
    Subcommand.RANDOM: Experiment.RANDOM,
    Subcommand.MOYAL_CHECK: Experiment.MOYAL,
    Subcommand.NORMS: Experiment.NORMS,
}


@dataclass
class CliInvocation:
    """
    One parsed command line

    Attributes:
        subcommand: What to run
        config_paths: Scenario config files (--config, repeatable)
        scenario_names: Builtin scenarios (--scenario, repeatable)
        overrides: Dotted section.key=value overrides (--set, repeatable)
        out_dir: Output root; each scenario writes to out_dir/<scenario-name>/
        seed: Replaces run.seed of every scenario when given
        jobs: Worker slots for independent scenarios
        check: Evaluate acceptance thresholds
        dump_matrix: Also write H_sigma of every base point as CSV
        timings: Fill runtime_ms in sweep.csv
        verbosity: 0 (warnings), 1 (info, progress bars), 2 (debug)
        export_dir: catalog only, write every builtin as <name>.cfg here
    """
    subcommand: Subcommand
    config_paths: List[str] = field(default_factory=list)
    scenario_names: List[str] = field(default_factory=list)
    overrides: List[str] = field(default_factory=list)
    out_dir: str = settings.DEFAULT_OUT_DIR
    seed: Optional[int] = None
    jobs: int = 1
    check: bool = False
    dump_matrix: bool = False
    timings: bool = False
    verbosity: int = 0
    export_dir: Optional[str] = None

    def __post_init__(self):
        self.subcommand = Subcommand(self.subcommand)
        self.verbosity = max(0, min(2, self.verbosity))

    @property
    def effective_overrides(self) -> List[str]:
        if self.seed is None:
            return list(self.overrides)
        return list(self.overrides) + [f"run.seed={self.seed}"]


def configure_logging(verbosity: int) -> None:
    logging.basicConfig(
        level=LOG_LEVELS[max(0, min(2, verbosity))],
        format=LOG_FORMAT,
        stream=sys.stderr,
        force=True,
    )


def exit_code_for(error: BaseException) -> int:
    """Map an exception to the exit-code contract"""
    if isinstance(error, AcceptanceError):
        return EXIT_ACCEPTANCE
    if isinstance(error, NumericalError):
        return EXIT_NUMERICAL
    if isinstance(error, (OrbitSpecError, OSError)):
        return EXIT_INVALID
    return EXIT_NUMERICAL


# ---------------------------------------------------------------------------
# Catalog
# ---------------------------------------------------------------------------

def print_catalog() -> str:
    """One line per builtin scenario, sorted by name"""
    lines = []
    for entry in builtin_catalog():
        scenario = entry.scenario
        symbol = scenario.symbol_name or scenario.expression
        lines.append(f"{scenario.name:<22} {scenario.action:<20} {symbol:<28} {entry.expected}  [{entry.tag}]")
    return "\n".join(lines)


def export_catalog(directory: str) -> List[Path]:
    target = Path(directory)
    target.mkdir(parents=True, exist_ok=True)
    written = []
    for entry in builtin_catalog():
        path = target / f"{entry.scenario.name}.cfg"
        path.write_text(scenario_to_config(entry.scenario), encoding="utf-8")
        written.append(path)
    return written


# ---------------------------------------------------------------------------
# Scenario runs
# ---------------------------------------------------------------------------

def resolve_scenarios(inv: CliInvocation) -> List[Scenario]:
    """
    Load every --config file and --scenario builtin with the overrides applied

    Raises:
        ConfigError: If nothing was selected, a file is unreadable or invalid,
            or a builtin name is unknown
    """
    overrides = inv.effective_overrides
    scenarios = [load_scenario_file(path, overrides) for path in inv.config_paths]
    for name in inv.scenario_names:
        if name not in builtin_names():
            raise ConfigError(f"unknown builtin scenario '{name}' (see 'orbitspec catalog')")
        scenarios.append(load_scenario(builtin_config_text(name), overrides))
    if not scenarios:
        raise ConfigError("no scenario selected; pass --config PATH or --scenario NAME")

    seen = set()
    for scenario in scenarios:
        if scenario.output_dir in seen:
            raise ConfigError(f"two scenarios write to the same output directory '{scenario.output_dir}'")
        seen.add(scenario.output_dir)
    return scenarios


def run_scenario(scenario: Scenario, inv: CliInvocation) -> List[str]:
    """
    Run the experiments the subcommand selects and write their CSVs

    Returns:
        Acceptance failures (always empty without --check)
    """
    if inv.subcommand == Subcommand.RUN:
        experiments = list(scenario.experiments)
    else:
        experiments = [SUBCOMMAND_EXPERIMENT[inv.subcommand]]
    out = Path(inv.out_dir) / scenario.output_dir
    progress = inv.verbosity > 0
    failures: List[str] = []

    for experiment in experiments:
        logger.info("%s: running %s", scenario.name, experiment.value)
        if experiment == Experiment.SPECTRUM:
            results = run_spectrum(scenario, progress=progress)
            write_spectrum_csv(results, out / "spectrum.csv")
            if inv.check:
                failures += check_spectrum(results)
        elif experiment == Experiment.ESS:
            report = run_ess(scenario, progress=progress)
            write_ess_csv(report, out / "ess.csv")
            if inv.check:
                failures += check_ess(report, reference=ap_formula_spectrum(scenario))
        elif experiment == Experiment.SWEEP:
            rows = run_hbar_sweep(scenario, base_points(scenario)[0], timings=inv.timings, progress=progress)
            write_sweep_csv(rows, out / "sweep.csv")
            if inv.check:
                failures += check_sweep(rows)
        elif experiment == Experiment.RANDOM:
            report = run_random_experiment(scenario, progress=progress)
            write_random_csv(report, out / "random.csv")
            if inv.check:
                failures += check_random(report)
        elif experiment == Experiment.MOYAL:
            report = run_moyal_check(scenario, progress=progress)
            write_moyal_csv(report, out / "moyal.csv")
            if inv.check:
                failures += check_moyal(report)
        elif experiment == Experiment.NORMS:
            profile = norm_profile(scenario, progress=progress)
            write_norms_csv(profile, out / "norms.csv")
            if inv.check:
                failures += check_norm_profile(profile)

    if inv.dump_matrix:
        for index, sigma in enumerate(base_points(scenario)):
            dump_matrix_csv(hamiltonian(scenario, sigma), out / f"matrix_{index}.csv")
    return [f"{scenario.name}: {failure}" for failure in failures]


def _run_all(scenarios: Sequence[Scenario], inv: CliInvocation) -> List[str]:
    if inv.jobs < 1:
        raise ConfigError(f"--jobs must be at least 1, got {inv.jobs}")
    run = partial(run_scenario, inv=inv)
    if inv.jobs == 1 or len(scenarios) == 1:
        results = [run(scenario) for scenario in scenarios]
    else:
        with ThreadPoolExecutor(max_workers=inv.jobs) as pool:
            results = list(pool.map(run, scenarios))
    return [failure for failures in results for failure in failures]


def dispatch(inv: CliInvocation) -> int:
    """
    Execute one invocation and return its exit code

    Diagnostics go to standard error; nothing escapes as a traceback.
    """
    configure_logging(inv.verbosity)
    try:
        if inv.subcommand == Subcommand.CATALOG:
            click.echo(print_catalog())
            if inv.export_dir is not None:
                written = export_catalog(inv.export_dir)
                click.echo(f"✅ Exported {len(written)} scenarios to {inv.export_dir}")
            return EXIT_OK

        scenarios = resolve_scenarios(inv)
        failures = _run_all(scenarios, inv)
        if failures:
            raise AcceptanceError(failures)
        for scenario in scenarios:
            click.echo(f"✅ {scenario.name} -> {Path(inv.out_dir) / scenario.output_dir}")
        return EXIT_OK
    except AcceptanceError as e:
        for failure in e.failures:
            click.echo(f"❌ {failure}", err=True)
        return EXIT_ACCEPTANCE
    except (OrbitSpecError, OSError) as e:
        click.echo(f"❌ Error: {e}", err=True)
        return exit_code_for(e)
    except Exception as e:
        logger.debug("unexpected failure", exc_info=True)
        click.echo(f"❌ Unexpected error: {type(e).__name__}: {e}", err=True)
        return EXIT_NUMERICAL


# ---------------------------------------------------------------------------
# click surface
# ---------------------------------------------------------------------------

def scenario_options(command):
    """Options shared by every scenario-running subcommand"""
    options = [
        click.option("--config", "config_paths", multiple=True, help="Scenario config file (repeatable)"),
        click.option("--scenario", "scenario_names", multiple=True, help="Builtin scenario name (repeatable)"),
        click.option("--set", "overrides", multiple=True, metavar="KEY=VALUE",
                     help="Dotted override such as grid.N=512 (repeatable)"),
        click.option("--out", "out_dir", default=settings.DEFAULT_OUT_DIR, show_default=True,
                     help="Output root; each scenario writes to OUT/<name>/"),
        click.option("--seed", type=int, default=None, help="Replaces run.seed of every scenario"),
        click.option("--jobs", type=int, default=1, show_default=True, help="Parallel scenario slots"),
        click.option("--check", is_flag=True, help="Evaluate acceptance thresholds (exit 3 on failure)"),
        click.option("--dump-matrix", is_flag=True, help="Write H_sigma of every base point as CSV"),
        click.option("--timings", is_flag=True, help="Record runtime_ms in sweep.csv"),
        click.option("-v", "--verbose", "verbosity", count=True, help="-v info and progress, -vv debug"),
    ]
    for option in reversed(options):
        command = option(command)
    return command


def _finish(subcommand: Subcommand, **kwargs) -> None:
    code = dispatch(CliInvocation(
        subcommand=subcommand,
        config_paths=list(kwargs.pop("config_paths")),
        scenario_names=list(kwargs.pop("scenario_names")),
        overrides=list(kwargs.pop("overrides")),
        **kwargs,
    ))
    click.get_current_context().exit(code)


@click.group()
def cli():
    """Spectra of sigma-indexed Weyl operators on phase-space dynamical systems."""


@cli.command()
@scenario_options
def run(**kwargs):
    """Run every experiment listed in run.experiments."""
    _finish(Subcommand.RUN, **kwargs)


@cli.command()
@scenario_options
def spectrum(**kwargs):
    """Spectrum of H_sigma at every base point (spectrum.csv)."""
    _finish(Subcommand.SPECTRUM, **kwargs)


@cli.command()
@scenario_options
def ess(**kwargs):
    """Predicted vs numerical essential spectrum at the first base point (ess.csv)."""
    _finish(Subcommand.ESS, **kwargs)


@cli.command()
@scenario_options
def sweep(**kwargs):
    """Semiclassical sweep over the hbar schedule (sweep.csv)."""
    _finish(Subcommand.SWEEP, **kwargs)


@cli.command()
@scenario_options
def random(**kwargs):
    """Spectra at seeded random base points of an ergodic action (random.csv)."""
    _finish(Subcommand.RANDOM, **kwargs)


@cli.command("moyal-check")
@scenario_options
def moyal_check(**kwargs):
    """Deformed-product morphism and expansion checks (moyal.csv)."""
    _finish(Subcommand.MOYAL_CHECK, **kwargs)


@cli.command()
@scenario_options
def norms(**kwargs):
    """Operator norm of H_sigma at every base point (norms.csv)."""
    _finish(Subcommand.NORMS, **kwargs)


@cli.command()
@click.option("--export", "export_dir", default=None, metavar="DIR", help="Write every builtin as DIR/<name>.cfg")
@click.option("-v", "--verbose", "verbosity", count=True)
def catalog(export_dir, verbosity):
    """List the builtin scenarios."""
    _finish(
        Subcommand.CATALOG,
        config_paths=(),
        scenario_names=(),
        overrides=(),
        export_dir=export_dir,
        verbosity=verbosity,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run the command line and return the exit code

    Usage errors map to exit 1 like any other invalid input.
    """
    try:
        result = cli.main(args=list(argv) if argv is not None else None, prog_name="orbitspec",
                          standalone_mode=False)
    except click.exceptions.Abort:
        click.echo("❌ Aborted", err=True)
        return EXIT_INVALID
    except click.ClickException as e:
        e.show()
        return EXIT_INVALID
    return result if isinstance(result, int) else EXIT_OK


def run_cli() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run_cli()
