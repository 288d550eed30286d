#!/usr/bin/env python3
"""
Asymptotic range: the values a phase function keeps outside every compact set
"""

import logging
from typing import Sequence

import numpy as np

from config import settings
from phasespace import PhaseFunction, SpectralSet, as_phase_function
from .distances import nearest_distances

logger = logging.getLogger(__name__)

DEFAULT_MATCH_TOLERANCE = 0.05


def _shell_values(F: PhaseFunction, r: float, samples: int, shell_ratio: float) -> np.ndarray:
    """F on log-spaced radii in [r, r*shell_ratio] times equispaced angles"""
    radii = np.geomspace(r, r * shell_ratio, 4 * samples)
    angles = 2.0 * np.pi * np.arange(samples) / samples
    R, A = np.meshgrid(radii, angles, indexing="ij")
    values = np.asarray(F(R * np.cos(A), R * np.sin(A)))
    if np.iscomplexobj(values):
        if np.max(np.abs(values.imag)) > 1e-12:
            raise ValueError(f"asymptotic range needs a real function, '{F.label}' is complex")
        values = values.real
    if not np.all(np.isfinite(values)):
        raise ValueError(f"'{F.label}' is not finite on the shell at radius {r:g}")
    return np.sort(values.ravel())


def asymptotic_range(
    F,
    radii: Sequence[float],
    samples_per_radius: int = settings.DEFAULT_BOUNDARY_SAMPLES,
    tol: float = DEFAULT_MATCH_TOLERANCE,
    shell_ratio: float = settings.DEFAULT_SHELL_RATIO,
) -> SpectralSet:
    """
    Approximate R_asy(F) = intersection over compacts K of closure F(Xi \\ K)

    Each radius r stands for the exterior region |X| >= r, sampled on the
    shell r <= |X| <= r * shell_ratio. Values of the outermost shell are kept
    when both previous shells come within tol of them.

    Args:
        F: Real phase function
        radii: Increasing radii, at least 3
        samples_per_radius: Angular samples per radius (radial samples are 4x this)
        tol: Stabilization tolerance, also the resolution of the result
        shell_ratio: Outer/inner radius of each sampled shell

    Returns:
        SpectralSet thinned at tol

    Raises:
        ValueError: If fewer than 3 radii are given, or they do not increase
    """
    radii = [float(r) for r in radii]
    if len(radii) < 3:
        raise ValueError(f"asymptotic_range needs at least 3 radii, got {len(radii)}")
    if any(r1 <= r0 for r0, r1 in zip(radii, radii[1:])) or radii[0] <= 0:
        raise ValueError(f"radii must be positive and increasing, got {radii}")

    F = as_phase_function(F)
    shells = [_shell_values(F, r, samples_per_radius, shell_ratio) for r in radii[-3:]]
    outer = shells[-1]
    keep = (nearest_distances(outer, shells[-2]) <= tol) & (nearest_distances(outer, shells[-3]) <= tol)
    result = SpectralSet(outer[keep], tol).merged()
    logger.debug("asymptotic range of %s at radii %s: %d values", F.label, radii[-3:], len(result))
    return result
