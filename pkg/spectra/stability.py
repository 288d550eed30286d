#!/usr/bin/env python3
"""
Truncation ladders and discrete-spectrum detection

The truncation-stable spectrum is a numerical proxy for the essential
spectrum: eigenvalues of the largest rung that persist, with a stable local
density, from the previous rung. Values that fail either test are reported as
truncation artifacts.
"""

import logging
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np
from tqdm import tqdm

from config import settings
from phasespace import Grid, SpectralSet
from weyl import OperatorMatrix
from .distances import nearest_distances
from .eigen import eigen_spectrum

logger = logging.getLogger(__name__)

Rung = Tuple[float, int]
Builder = Callable[[float, int], OperatorMatrix]

DENSITY_RATIO_RANGE = (0.5, 2.0)


def default_ladder(grid: Grid) -> List[Rung]:
    """(L, N) and one refined rung scaled by the configured factors"""
    return [
        (grid.L, grid.N),
        (grid.L * settings.LADDER_L_FACTOR, grid.N * settings.LADDER_N_FACTOR),
    ]


def _check_ladder(ladder: Sequence[Rung]) -> List[Rung]:
    ladder = [(float(L), int(N)) for L, N in ladder]
    if len(ladder) < 2:
        raise ValueError(f"ladder too short: need at least 2 rungs, got {len(ladder)}")
    for (L0, N0), (L1, N1) in zip(ladder, ladder[1:]):
        if L1 <= L0 or N1 <= N0:
            raise ValueError(f"ladder rungs must grow: ({L0:g}, {N0}) -> ({L1:g}, {N1})")
    return ladder


@dataclass(frozen=True)
class StabilityReport:
    """
    Outcome of a truncation ladder

    Attributes:
        stable: Values of the largest rung that passed both tests
        discarded: Values of the largest rung rejected as truncation artifacts
        rung_spectra: Full spectrum at every rung, in ladder order
        ladder: The (L, N) rungs
        tolerance: Matching tolerance used
    """
    stable: SpectralSet
    discarded: SpectralSet
    rung_spectra: Tuple[SpectralSet, ...]
    ladder: Tuple[Rung, ...]
    tolerance: float


def _local_density(values: np.ndarray, points: np.ndarray, tol: float) -> np.ndarray:
    lo = np.searchsorted(values, points - tol, side="left")
    hi = np.searchsorted(values, points + tol, side="right")
    return (hi - lo) / values.size


def truncation_stability(
    builder: Builder,
    ladder: Sequence[Rung],
    tol: Optional[float] = None,
    progress: bool = False,
) -> StabilityReport:
    """
    Run a truncation ladder and split the last rung into stable and discarded values

    Args:
        builder: (L, N) -> OperatorMatrix
        ladder: At least two rungs with growing L and N
        tol: Matching tolerance; defaults to the resolution of the last rung
        progress: Show a progress bar

    Returns:
        StabilityReport

    Raises:
        ValueError: If the ladder is too short or does not grow
    """
    ladder = _check_ladder(ladder)
    spectra = []
    for L, N in tqdm(ladder, desc="ladder", disable=not progress, leave=False):
        spectra.append(eigen_spectrum(builder(L, N)))
        logger.debug("rung L=%g N=%d: %d eigenvalues", L, N, len(spectra[-1]))

    final, previous = spectra[-1], spectra[-2]
    if tol is None:
        tol = final.resolution
    values = final.values

    matched = nearest_distances(values, previous.values) <= tol
    ratio = _local_density(values, values, tol) / np.maximum(
        _local_density(previous.values, values, tol), np.finfo(float).tiny
    )
    dense_ok = (ratio >= DENSITY_RATIO_RANGE[0]) & (ratio <= DENSITY_RATIO_RANGE[1])
    keep = matched & dense_ok

    logger.info("truncation ladder %s: %d stable, %d discarded (tol %.3g)",
                ladder, int(keep.sum()), int((~keep).sum()), tol)
    return StabilityReport(
        stable=SpectralSet(values[keep], final.resolution),
        discarded=SpectralSet(values[~keep], final.resolution),
        rung_spectra=tuple(spectra),
        ladder=tuple(ladder),
        tolerance=float(tol),
    )


def truncation_stable_spectrum(
    builder: Builder,
    ladder: Sequence[Rung],
    tol: Optional[float] = None,
) -> SpectralSet:
    """The stable part of truncation_stability(builder, ladder, tol)"""
    return truncation_stability(builder, ladder, tol).stable


def _clusters(values: np.ndarray, degeneracy: float) -> List[np.ndarray]:
    if values.size == 0:
        return []
    breaks = np.nonzero(np.diff(values) > degeneracy)[0] + 1
    return np.split(values, breaks)


def isolated_eigenvalues(
    S: SpectralSet,
    gap: float,
    window: Optional[Tuple[float, float]] = None,
    max_multiplicity: int = settings.MAX_ISOLATED_MULTIPLICITY,
    degeneracy: float = settings.DEGENERACY_TOLERANCE,
) -> List[float]:
    """
    Eigenvalues of finite multiplicity separated from the rest by more than gap

    Values within `degeneracy` of each other form one eigenvalue; clusters
    larger than max_multiplicity are treated as accumulation, not isolation.

    Args:
        S: Spectrum
        gap: Minimum distance to the nearest distinct eigenvalue, > 0
        window: Closed interval to report from; defaults to the hull of S
            shrunk by the edge margin (EDGE_MARGIN_RESOLUTIONS resolutions)
        max_multiplicity: Largest cluster still counted as one isolated eigenvalue
        degeneracy: Merge tolerance for repeated eigenvalues

    Returns:
        Cluster centres, ascending
    """
    if gap <= 0:
        raise ValueError(f"gap must be positive, got {gap}")
    clusters = _clusters(S.values, degeneracy)
    if not clusters:
        return []
    if window is None:
        lo, hi = S.hull
        margin = settings.EDGE_MARGIN_RESOLUTIONS * S.resolution
        window = (lo + margin, hi - margin)

    centres = np.array([c.mean() for c in clusters])
    isolated = []
    for i, cluster in enumerate(clusters):
        centre = centres[i]
        if not window[0] <= centre <= window[1]:
            continue
        if cluster.size > max_multiplicity:
            continue
        below = centre - clusters[i - 1][-1] if i > 0 else np.inf
        above = clusters[i + 1][0] - centre if i + 1 < len(clusters) else np.inf
        if min(below, above) > gap:
            isolated.append(float(centre))
    return isolated
