#!/usr/bin/env python3
"""
Scenario layer: config parsing, the builtin catalog, experiments and outputs
"""

from .models import (
    Experiment,
    Scenario,
    CatalogEntry,
    SweepRow,
    RandomSample,
    RandomReport,
    MoyalReport,
    PointSpectrum,
    PointNorm,
)
from .config_parser import (
    KNOWN_KEYS,
    parse_point,
    parse_config_text,
    apply_overrides,
    check_scenario,
    load_scenario,
    load_scenario_file,
    scenario_to_config,
)
from .experiments import (
    build_action,
    build_symbol,
    base_points,
    scenario_grid,
    hamiltonian,
    classical_range,
    classical_essential_range,
    run_spectrum,
    run_ess,
    run_hbar_sweep,
    run_random_experiment,
    run_moyal_check,
    norm_profile,
    ap_formula_spectrum,
)
from .catalog import builtin_catalog, builtin_config_text, builtin_names, ap_reference_spectrum
from .checks import check_spectrum, check_sweep, check_random, check_ess, check_moyal, check_norm_profile
from .outputs import (
    write_spectrum_csv,
    write_ess_csv,
    write_sweep_csv,
    write_random_csv,
    write_moyal_csv,
    write_norms_csv,
)

__all__ = [
    "Experiment",
    "Scenario",
    "CatalogEntry",
    "SweepRow",
    "RandomSample",
    "RandomReport",
    "MoyalReport",
    "PointSpectrum",
    "PointNorm",
    "KNOWN_KEYS",
    "parse_point",
    "parse_config_text",
    "apply_overrides",
    "check_scenario",
    "load_scenario",
    "load_scenario_file",
    "scenario_to_config",
    "build_action",
    "build_symbol",
    "base_points",
    "scenario_grid",
    "hamiltonian",
    "classical_range",
    "classical_essential_range",
    "run_spectrum",
    "run_ess",
    "run_hbar_sweep",
    "run_random_experiment",
    "run_moyal_check",
    "norm_profile",
    "ap_formula_spectrum",
    "builtin_catalog",
    "builtin_config_text",
    "builtin_names",
    "ap_reference_spectrum",
    "check_spectrum",
    "check_sweep",
    "check_random",
    "check_ess",
    "check_moyal",
    "check_norm_profile",
    "write_spectrum_csv",
    "write_ess_csv",
    "write_sweep_csv",
    "write_random_csv",
    "write_moyal_csv",
    "write_norms_csv",
]
