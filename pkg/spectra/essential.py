#!/usr/bin/env python3
"""
Essential spectrum: algebraic prediction from quasi-orbits, numerical check
by truncation stability

For sigma of the first kind, sp_ess(H_sigma) is the closed union of the spectra
of the asymptotic Hamiltonians H_tau, tau running over points generating the
non-generic sub-quasi-orbits of E_sigma. For sigma of the second kind the
discrete spectrum is void and the prediction is sp(H_sigma) itself.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from config import settings
from dynamics import (
    HINT_CONSTANT,
    HINT_FOURIER_MULTIPLIER,
    HINT_MULTIPLICATION,
    ActionSpec,
    OrbitKind,
    StatePoint,
    classify_kind,
    non_generic_suborbits,
    pullback_symbol,
)
from phasespace import ActionError, Grid, PhaseFunction, SpectralSet, make_grid
from weyl import build_op_matrix
from .distances import hausdorff, union_closure
from .eigen import eigen_spectrum
from .stability import Rung, default_ladder, isolated_eigenvalues, truncation_stability

logger = logging.getLogger(__name__)

# Fixed sample points (in units of L) used to recognise repeated sub-orbit symbols
_FINGERPRINT_POINTS = np.array([
    (0.0, 0.0), (0.5, 0.0), (0.0, 0.5), (-0.5, 0.0), (0.0, -0.5), (0.3, 0.7),
    (-0.7, 0.3), (0.9, -0.2), (-0.2, -0.9), (0.25, 0.25), (-0.6, -0.6), (0.8, 0.8),
    (0.1, -0.4), (-0.45, 0.15), (0.65, -0.75), (-0.95, 0.55),
])
_DECAY_RADIUS_FACTOR = 10.0
_DECAY_TOLERANCE = 1e-6


@dataclass(frozen=True)
class EssentialSpectrumReport:
    """
    Predicted against numerical essential spectrum of H_sigma

    Attributes:
        predicted: Union of asymptotic-Hamiltonian spectra (or sp(H_sigma) for the second kind)
        numerical: Truncation-stable estimate restricted to the essential window
        hausdorff_distance: hausdorff(predicted, numerical), inf if numerical is empty
        per_suborbit: Spectrum of each asymptotic Hamiltonian, by sub-orbit id
        method_notes: How each part was obtained
        kind: Kind of the quasi-orbit generated by sigma
        purely_essential: True when the discrete spectrum is void
        rung_spectra: Full spectra of the truncation ladder, in ladder order
    """
    predicted: SpectralSet
    numerical: SpectralSet
    hausdorff_distance: float
    per_suborbit: Dict[str, SpectralSet] = field(default_factory=dict)
    method_notes: Tuple[str, ...] = ()
    kind: OrbitKind = OrbitKind.FIRST
    purely_essential: bool = False
    rung_spectra: Tuple[SpectralSet, ...] = ()


def _real_values(values) -> np.ndarray:
    values = np.asarray(values)
    if np.iscomplexobj(values):
        values = values.real
    return np.asarray(values, dtype=float).ravel()


def _fingerprint(F: PhaseFunction, grid: Grid, hint: Optional[str]) -> tuple:
    values = np.asarray(F(grid.L * _FINGERPRINT_POINTS[:, 0], grid.L * _FINGERPRINT_POINTS[:, 1]))
    return (hint,) + tuple(np.round(values.real, 10)) + tuple(np.round(np.imag(values), 10))


def suborbit_spectrum(F: PhaseFunction, hint: Optional[str], grid: Grid, hbar: float) -> Tuple[SpectralSet, str]:
    """
    Spectrum of one asymptotic Hamiltonian Op(F)

    Closed forms: a multiplication operator has the multiplier's grid values,
    a Fourier multiplier its values on the dual nodes, a constant symbol one
    value. Anything else is assembled and diagonalised.

    Returns:
        (spectrum, method)
    """
    if hint == HINT_MULTIPLICATION:
        values = F(grid.nodes, np.zeros(grid.N))
        return SpectralSet(_real_values(values), grid.resolution), "closed form: multiplication"
    if hint == HINT_FOURIER_MULTIPLIER:
        values = F(np.zeros(grid.N), grid.dual_nodes(hbar))
        return SpectralSet(_real_values(values), grid.resolution), "closed form: Fourier multiplier"
    if hint == HINT_CONSTANT:
        values = F(np.zeros(1), np.zeros(1))
        return SpectralSet(_real_values(values), grid.resolution), "closed form: constant"
    return eigen_spectrum(build_op_matrix(F, grid, hbar)), "matrix"


def _check_decay(F: PhaseFunction, grid: Grid) -> None:
    r = _DECAY_RADIUS_FACTOR * grid.L
    angles = 2.0 * np.pi * np.arange(settings.DEFAULT_BOUNDARY_SAMPLES) / settings.DEFAULT_BOUNDARY_SAMPLES
    peak = float(np.max(np.abs(F(r * np.cos(angles), r * np.sin(angles)))))
    if peak > _DECAY_TOLERANCE:
        raise ActionError(
            f"'{F.label}' does not vanish at infinity (|F| = {peak:.3g} at radius {r:g}); "
            "the translation action only carries compact Hamiltonians"
        )


def predicted_spectrum(
    a: ActionSpec,
    sigma: StatePoint,
    f,
    grid: Grid,
    hbar: float,
    samples: int = settings.DEFAULT_BOUNDARY_SAMPLES,
) -> Tuple[SpectralSet, Dict[str, SpectralSet], List[str], OrbitKind]:
    """
    The algebraic side of predicted_ess_spectrum

    Returns:
        (predicted, per_suborbit, method_notes, kind)
    """
    E = a.quasi_orbit_of(sigma)
    kind = classify_kind(E)
    notes: List[str] = [f"quasi-orbit {E.id} ({kind.value} kind)"]

    if kind == OrbitKind.SECOND:
        spectrum, method = suborbit_spectrum(
            pullback_symbol(f, a, sigma), E.closed_form_spectrum_hint, grid, hbar
        )
        notes.append(f"purely essential: predicted = sp(H_sigma), {method}")
        return spectrum, {}, notes, kind

    cover = non_generic_suborbits(a, E, samples)
    if not cover:
        _check_decay(pullback_symbol(f, a, sigma), grid)
        notes.append("compact Hamiltonian: predicted = {0}")
        return SpectralSet.of([0.0], grid.resolution), {}, notes, kind

    per_suborbit: Dict[str, SpectralSet] = {}
    cache: Dict[tuple, SpectralSet] = {}
    for sub in sorted(cover, key=lambda q: q.id):
        F = pullback_symbol(f, a, sub.generating_point)
        hint = sub.closed_form_spectrum_hint
        key = _fingerprint(F, grid, hint)
        if key in cache:
            per_suborbit[sub.id] = cache[key]
            continue
        spectrum, method = suborbit_spectrum(F, hint, grid, hbar)
        cache[key] = per_suborbit[sub.id] = spectrum
        notes.append(f"{sub.id}: {method}")
    logger.info("%s: %d sub-orbits, %d distinct spectra", E.id, len(per_suborbit), len(cache))
    predicted = union_closure([per_suborbit[k] for k in sorted(per_suborbit)])
    return predicted, per_suborbit, notes, kind


def essential_window(predicted: SpectralSet, resolution: float) -> Tuple[float, float]:
    lo, hi = predicted.hull
    margin = settings.EDGE_MARGIN_RESOLUTIONS * resolution
    return lo - margin, hi + margin


def essential_estimate(
    stable: SpectralSet,
    gap: float,
    window: Tuple[float, float],
    degeneracy: float = settings.DEGENERACY_TOLERANCE,
) -> SpectralSet:
    """
    Stable values inside window with the isolated eigenvalues removed

    Args:
        stable: Truncation-stable spectrum
        gap: Isolation gap passed to isolated_eigenvalues
        window: Essential window (low, high)
        degeneracy: Cluster tolerance for repeated eigenvalues

    Returns:
        SpectralSet at the resolution of stable
    """
    inside = stable.restrict(*window)
    isolated = isolated_eigenvalues(inside, gap, window=window, degeneracy=degeneracy)
    if not isolated:
        return inside
    values = inside.values
    drop = np.zeros(values.size, dtype=bool)
    for value in isolated:
        drop |= np.abs(values - value) <= degeneracy + 1e-12 * max(1.0, abs(value))
    return SpectralSet(values[~drop], inside.resolution)


def predicted_ess_spectrum(
    a: ActionSpec,
    sigma: StatePoint,
    f,
    grid: Grid,
    hbar: float,
    ladder: Optional[Sequence[Rung]] = None,
    gap: float = settings.DEFAULT_ISOLATION_GAP,
    samples: int = settings.DEFAULT_BOUNDARY_SAMPLES,
    progress: bool = False,
) -> EssentialSpectrumReport:
    """
    Predict sp_ess(H_sigma) from the quasi-orbit structure and check it numerically

    Args:
        a: The action
        sigma: Base point
        f: Symbol on the action's state space
        grid: Grid for the asymptotic Hamiltonians and the first ladder rung
        hbar: Planck parameter
        ladder: Truncation ladder; defaults to default_ladder(grid)
        gap: Isolation gap for removing discrete eigenvalues from the estimate
        samples: Members drawn from one-parameter families of sub-orbits
        progress: Show a progress bar over the ladder

    Returns:
        EssentialSpectrumReport

    Raises:
        ActionError: If sigma is not a point of the action, or the prediction
            is undefined (a non-decaying symbol on the translation action)
    """
    a.validate_point(sigma)
    predicted, per_suborbit, notes, kind = predicted_spectrum(a, sigma, f, grid, hbar, samples)

    ladder = list(ladder) if ladder is not None else default_ladder(grid)
    F = pullback_symbol(f, a, sigma)
    stability = truncation_stability(
        lambda L, N: build_op_matrix(F, make_grid(L, N), hbar), ladder, progress=progress
    )
    window = essential_window(predicted, stability.stable.resolution)
    numerical = essential_estimate(stability.stable, gap, window)
    notes.append(
        f"numerical: truncation-stable on {ladder}, window [{window[0]:.6g}, {window[1]:.6g}], "
        f"{len(stability.discarded)} discarded"
    )

    distance = hausdorff(predicted, numerical) if not numerical.empty else float("inf")
    return EssentialSpectrumReport(
        predicted=predicted,
        numerical=numerical,
        hausdorff_distance=distance,
        per_suborbit=per_suborbit,
        method_notes=tuple(notes),
        kind=kind,
        purely_essential=kind == OrbitKind.SECOND,
        rung_spectra=stability.rung_spectra,
    )


def report_rows(report: EssentialSpectrumReport) -> List[dict]:
    """ess.csv rows: (value, source) with source in predicted, numerical, suborbit:<id>"""
    rows = [{"value": v, "source": "predicted"} for v in report.predicted]
    rows += [{"value": v, "source": "numerical"} for v in report.numerical]
    for sub_id in sorted(report.per_suborbit):
        rows += [{"value": v, "source": f"suborbit:{sub_id}"} for v in report.per_suborbit[sub_id]]
    return rows
