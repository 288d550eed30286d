#!/usr/bin/env python3
"""
Experiments on scenarios: spectra, essential spectra, hbar sweeps, random
base points and deformed-product checks
"""

import itertools
import logging
import time
from typing import List, Optional, Tuple

import numpy as np
from tqdm import tqdm

from config import settings
from dynamics import (
    ActionSpec,
    OrbitKind,
    ProductSymbol,
    StatePoint,
    StateSymbol,
    action_registry,
    classify_kind,
    expression_symbol,
    named_symbol,
    non_generic_suborbits,
    pullback_symbol,
    task_rng,
)
from phasespace import ActionError, ConfigError, Grid, PhaseFunction, SpectralSet, make_grid, parse_symbol
from spectra import (
    EssentialSpectrumReport,
    eigen_spectrum,
    hausdorff,
    isolated_eigenvalues,
    predicted_ess_spectrum,
    predicted_spectrum,
    union_closure,
)
from spectra.stability import Rung
from weyl import (
    OperatorMatrix,
    build_op_matrix,
    expansion_remainder,
    moyal_product,
    op_from_samples,
    resolvent_norm,
    sample_symbol,
)
from .catalog import ap_reference_spectrum
from .config_parser import parse_point
from .models import MoyalReport, PointNorm, PointSpectrum, RandomReport, RandomSample, Scenario, SweepRow

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Scenario -> objects
# ---------------------------------------------------------------------------

def build_action(scenario: Scenario) -> ActionSpec:
    return action_registry.create(scenario.action, **scenario.action_params)


def build_symbol(scenario: Scenario) -> StateSymbol:
    if scenario.symbol_name is not None:
        return named_symbol(scenario.symbol_name)
    return expression_symbol(scenario.expression, bound=scenario.symbol_bound)


def base_points(scenario: Scenario) -> List[StatePoint]:
    return [parse_point(text) for text in scenario.base_points]


def scenario_grid(scenario: Scenario) -> Grid:
    return make_grid(scenario.L, scenario.N)


def scenario_ladder(scenario: Scenario) -> Optional[List[Rung]]:
    return list(scenario.ladder) if scenario.ladder is not None else None


def hamiltonian(
    scenario: Scenario,
    sigma: StatePoint,
    hbar: Optional[float] = None,
    grid: Optional[Grid] = None,
) -> OperatorMatrix:
    """Matrix of H_sigma = Op_sigma(f) at hbar (default: the working hbar)"""
    a = build_action(scenario)
    F = pullback_symbol(build_symbol(scenario), a, sigma)
    return build_op_matrix(
        F,
        grid or scenario_grid(scenario),
        scenario.working_hbar if hbar is None else hbar,
        provenance=f"{F.label} [{scenario.action}]",
    )


def _spectrum(scenario: Scenario, M: OperatorMatrix) -> SpectralSet:
    return eigen_spectrum(M, resolution=scenario.resolution)


# ---------------------------------------------------------------------------
# Classical ranges
# ---------------------------------------------------------------------------

def _box_values(F: PhaseFunction, samples: int) -> np.ndarray:
    axis = np.linspace(-settings.CLASSICAL_RANGE_BOX, settings.CLASSICAL_RANGE_BOX, samples)
    x, xi = np.meshgrid(axis, axis, indexing="ij")
    return np.asarray(F(x, xi)).ravel()


def _require_real(scenario: Scenario, symbol: StateSymbol) -> None:
    if not symbol.real:
        key = "symbol.name" if scenario.symbol_name else "symbol.expr"
        raise ConfigError(f"classical range needs a real symbol, '{symbol.name}' is complex", field=key)


def _range_set(values: np.ndarray) -> SpectralSet:
    values = np.unique(np.real(values))
    return SpectralSet(values, settings.CLASSICAL_RANGE_RESOLUTION).merged()


def _essential_values(
    scenario: Scenario, a: ActionSpec, symbol: StateSymbol, sigma: StatePoint
) -> Optional[np.ndarray]:
    """f over the non-generic part of E_sigma; None for the second kind"""
    E = a.quasi_orbit_of(sigma)
    if classify_kind(E) != OrbitKind.FIRST:
        return None
    cover = non_generic_suborbits(a, E, scenario.boundary_samples)
    if not cover:
        return np.zeros(1)
    samples = max(settings.CLASSICAL_RANGE_SAMPLES // 4, 3)
    return np.concatenate([
        _box_values(pullback_symbol(symbol, a, sub.generating_point), samples) for sub in cover
    ])


def classical_range(scenario: Scenario, sigma: StatePoint) -> SpectralSet:
    """
    closure f(E_sigma), sampled

    The orbit of sigma is sampled on a box grid in phase space; for a
    first-kind sigma the non-generic sub-orbits are added.

    Raises:
        ConfigError: If the symbol is complex-valued
    """
    a = build_action(scenario)
    symbol = build_symbol(scenario)
    _require_real(scenario, symbol)
    values = [_box_values(pullback_symbol(symbol, a, sigma), settings.CLASSICAL_RANGE_SAMPLES)]
    extra = _essential_values(scenario, a, symbol, sigma)
    if extra is not None and a.quasi_orbit_of(sigma).non_generic_cover:
        values.append(extra)
    return _range_set(np.concatenate(values))


def classical_essential_range(scenario: Scenario, sigma: StatePoint) -> SpectralSet:
    """
    closure f(E^n_sigma) for first-kind sigma ({0} for compact Hamiltonians);
    the full classical range for the second kind
    """
    a = build_action(scenario)
    symbol = build_symbol(scenario)
    _require_real(scenario, symbol)
    extra = _essential_values(scenario, a, symbol, sigma)
    if extra is None:
        return classical_range(scenario, sigma)
    return _range_set(extra)


# ---------------------------------------------------------------------------
# Experiments
# ---------------------------------------------------------------------------

def run_spectrum(scenario: Scenario, progress: bool = False) -> List[PointSpectrum]:
    """sp(H_sigma) at the working hbar for every base point"""
    results = []
    for sigma in tqdm(base_points(scenario), desc="spectrum", disable=not progress, leave=False):
        M = hamiltonian(scenario, sigma)
        results.append(PointSpectrum(
            point_id=str(sigma),
            spectrum=_spectrum(scenario, M),
            hermitian_defect=M.hermitian_defect,
        ))
        logger.info("%s: spectrum at %s computed", scenario.name, sigma)
    return results


def run_ess(scenario: Scenario, progress: bool = False) -> EssentialSpectrumReport:
    """Essential-spectrum report for the first base point"""
    sigma = base_points(scenario)[0]
    return predicted_ess_spectrum(
        build_action(scenario),
        sigma,
        build_symbol(scenario),
        scenario_grid(scenario),
        scenario.working_hbar,
        ladder=scenario_ladder(scenario),
        gap=scenario.gap,
        samples=scenario.boundary_samples,
        progress=progress,
    )


def run_hbar_sweep(
    scenario: Scenario,
    sigma: StatePoint,
    timings: bool = False,
    progress: bool = False,
) -> List[SweepRow]:
    """
    sp(H^hbar_sigma) and its distance to closure f(E_sigma) for every hbar

    Rows come in decreasing hbar; non-monotone distances are reported, not
    corrected.

    Args:
        scenario: Scenario
        sigma: Base point
        timings: Record wall-clock runtime per row (otherwise 0)
        progress: Show a progress bar

    Returns:
        List of SweepRow
    """
    a = build_action(scenario)
    symbol = build_symbol(scenario)
    grid = scenario_grid(scenario)
    classical = classical_range(scenario, sigma)
    first_kind = classify_kind(a.quasi_orbit_of(sigma)) == OrbitKind.FIRST
    classical_ess = classical_essential_range(scenario, sigma) if first_kind else None

    rows = []
    schedule = sorted(scenario.hbar_schedule, reverse=True)
    for hbar in tqdm(schedule, desc="hbar sweep", disable=not progress, leave=False):
        start = time.perf_counter()
        M = hamiltonian(scenario, sigma, hbar=hbar, grid=grid)
        spectrum = _spectrum(scenario, M)
        elapsed = int(round(1000.0 * (time.perf_counter() - start)))

        resolvent = None
        if scenario.zeta_value is not None:
            resolvent = resolvent_norm(M, scenario.zeta_value, eigenvalues=spectrum.values)
        d_ess = None
        if classical_ess is not None:
            try:
                predicted = predicted_spectrum(a, sigma, symbol, grid, hbar, scenario.boundary_samples)[0]
                d_ess = hausdorff(predicted, classical_ess)
            except ActionError as e:
                logger.warning("no essential prediction at hbar=%g: %s", hbar, e)

        rows.append(SweepRow(
            hbar=hbar,
            spectrum=spectrum,
            d_to_classical=hausdorff(spectrum, classical),
            runtime_ms=elapsed if timings else 0,
            resolvent_norm=resolvent,
            d_ess_to_classical=d_ess,
        ))
        logger.info("hbar=%g: d_to_classical=%.4f", hbar, rows[-1].d_to_classical)
    return rows


def run_random_experiment(
    scenario: Scenario,
    count: Optional[int] = None,
    seed: Optional[int] = None,
    progress: bool = False,
) -> RandomReport:
    """
    Spectra at seeded random base points of an ergodic action

    Args:
        scenario: Scenario on an ergodic catalog action
        count: Number of base points (default: scenario.count), at least 2
        seed: Run seed (default: scenario.seed); point i uses the stream (seed, i)
        progress: Show a progress bar

    Returns:
        RandomReport with per-point max pairwise distance and isolated eigenvalues

    Raises:
        ConfigError: If count < 2
        ActionError: If the action is not ergodic
    """
    count = scenario.count if count is None else count
    seed = scenario.seed if seed is None else seed
    if count < 2:
        raise ConfigError("count ≥ 2 required", field="run.count")
    a = build_action(scenario)
    if not a.ERGODIC:
        raise ActionError(f"'{a.ACTION_ID}' is not an ergodic catalog entry; the random experiment needs one")

    points = [a.random_state(task_rng(seed, index)) for index in range(count)]
    spectra = [
        _spectrum(scenario, hamiltonian(scenario, sigma))
        for sigma in tqdm(points, desc="random points", disable=not progress, leave=False)
    ]
    distances = np.zeros((count, count))
    for i, j in itertools.combinations(range(count), 2):
        distances[i, j] = distances[j, i] = hausdorff(spectra[i], spectra[j])

    samples = [
        RandomSample(
            sample_id=index,
            point=str(points[index]),
            max_pairwise_d=float(distances[index].max()),
            isolated=isolated_eigenvalues(spectra[index], scenario.gap),
        )
        for index in range(count)
    ]
    report = RandomReport(seed=seed, hbar=scenario.working_hbar, samples=samples)
    logger.info("random experiment: %d points, max pairwise d=%.4f", count, report.max_pairwise_d)
    return report


def run_moyal_check(scenario: Scenario, progress: bool = False) -> MoyalReport:
    """
    Op(f#g) against Op(f)Op(g) at N and 2N, and the expansion remainder
    f#g - fg - (i hbar/2){f,g} over the hbar schedule

    Raises:
        ConfigError: If the scenario is not a translation scenario with an
            expression and a partner expression
    """
    if scenario.action != "translation":
        raise ConfigError("the deformed-product check runs on the translation action", field="action.id")
    if scenario.expression is None or scenario.partner is None:
        raise ConfigError("the deformed-product check needs symbol.expr and symbol.partner", field="symbol.partner")
    f = parse_symbol(scenario.expression, bound=scenario.symbol_bound)
    g = parse_symbol(scenario.partner)

    hbar = settings.MORPHISM_HBAR
    errors: List[Tuple[int, float]] = []
    for N in tqdm((scenario.N, 2 * scenario.N), desc="morphism", disable=not progress, leave=False):
        grid = make_grid(scenario.L, N)
        fs, gs = sample_symbol(f, grid, hbar), sample_symbol(g, grid, hbar)
        Of, Og = op_from_samples(fs), op_from_samples(gs)
        product = op_from_samples(moyal_product(fs, gs), provenance="f # g").entries
        errors.append((N, float(np.linalg.norm(product - Of @ Og, 2) / (Of.norm() * Og.norm()))))
        logger.info("morphism at N=%d: relative error %.3e", N, errors[-1][1])

    grid = scenario_grid(scenario)
    remainders = []
    for h in sorted(scenario.hbar_schedule, reverse=True):
        remainders.append((h, expansion_remainder(sample_symbol(f, grid, h), sample_symbol(g, grid, h))))
    return MoyalReport(morphism_hbar=hbar, morphism_errors=errors, remainders=remainders)


def norm_profile(scenario: Scenario, progress: bool = False) -> List[PointNorm]:
    """||H_sigma|| at every base point; the sup over Sigma is ||Op(f)||"""
    profile = []
    for sigma in tqdm(base_points(scenario), desc="norms", disable=not progress, leave=False):
        profile.append(PointNorm(point_id=str(sigma), norm=hamiltonian(scenario, sigma).norm()))
        logger.info("%s: ||H|| = %.6g at %s", scenario.name, profile[-1].norm, sigma)
    return profile


def ap_formula_spectrum(scenario: Scenario) -> Optional[SpectralSet]:
    """
    The closed-form sp_ess of a vo-ap product or sum symbol g op h

    c * sp(Op(h)) over c in R_asy(g) for g * h, and R_asy(g) + sp(Op(h)) for
    g + h, with sp(Op(h)) from the cached reference on the scenario grid.
    None for any other scenario.
    """
    if scenario.action != "vo-ap" or scenario.symbol_name is None:
        return None
    symbol = build_symbol(scenario)
    if not isinstance(symbol, ProductSymbol):
        return None
    a = build_action(scenario)
    frequency = tuple(tuple(float(v) for v in row) for row in a.frequency)
    reference = ap_reference_spectrum(symbol.h.name, scenario.L, scenario.N, scenario.working_hbar, frequency)
    angles = 2.0 * np.pi * np.arange(scenario.boundary_samples) / scenario.boundary_samples
    limits = np.unique(symbol.g.limit_values(angles))
    if symbol.op == "times":
        return union_closure([reference.scaled(c) for c in limits])
    return reference.minkowski_sum(SpectralSet.of(limits))
