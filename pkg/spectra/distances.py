#!/usr/bin/env python3
"""
Set distances on the real line
"""

from typing import List, Sequence, Tuple, Union

import numpy as np

from phasespace import SpectralSet

SetLike = Union[SpectralSet, Sequence[float], np.ndarray]


def _sorted_values(S: SetLike) -> np.ndarray:
    if isinstance(S, SpectralSet):
        return S.values
    return np.sort(np.asarray(S, dtype=float).ravel())


def nearest_distances(points: np.ndarray, sorted_targets: np.ndarray) -> np.ndarray:
    """Distance from every point to the closest entry of a sorted, non-empty array"""
    idx = np.searchsorted(sorted_targets, points)
    last = sorted_targets.size - 1
    left = sorted_targets[np.clip(idx - 1, 0, last)]
    right = sorted_targets[np.clip(idx, 0, last)]
    return np.minimum(np.abs(points - left), np.abs(points - right))


def hausdorff(S1: SetLike, S2: SetLike) -> float:
    """
    Hausdorff distance between two finite sets of reals

    Args:
        S1: First set
        S2: Second set

    Returns:
        max(sup_a inf_b |a - b|, sup_b inf_a |a - b|)

    Raises:
        ValueError: If either set is empty
    """
    a = _sorted_values(S1)
    b = _sorted_values(S2)
    if a.size == 0 or b.size == 0:
        raise ValueError("hausdorff distance needs two non-empty sets")
    return float(max(np.max(nearest_distances(a, b)), np.max(nearest_distances(b, a))))


def union_closure(parts: Sequence[SpectralSet]) -> SpectralSet:
    """
    Sorted union of spectral sets at the coarsest resolution among them

    No thinning is applied; call merged() on the result for that.

    Raises:
        ValueError: If parts is empty
    """
    parts = list(parts)
    if not parts:
        raise ValueError("union_closure needs at least one set")
    values = np.concatenate([p.values for p in parts])
    return SpectralSet(values, max(p.resolution for p in parts))


def match_pairs(a: SetLike, b: SetLike, tol: float) -> List[Tuple[float, float]]:
    """
    Greedy one-to-one nearest matching between two sorted lists

    Candidate pairs closer than tol are taken in order of increasing distance
    (ties by position in a, then in b); each value is used at most once.

    Returns:
        Matched (a_value, b_value) pairs sorted by a_value
    """
    a = _sorted_values(a)
    b = _sorted_values(b)
    candidates = []
    for i, value in enumerate(a):
        lo = np.searchsorted(b, value - tol, side="left")
        hi = np.searchsorted(b, value + tol, side="right")
        for j in range(lo, hi):
            candidates.append((abs(value - b[j]), i, j))
    candidates.sort()

    used_a, used_b = set(), set()
    pairs = []
    for _, i, j in candidates:
        if i in used_a or j in used_b:
            continue
        used_a.add(i)
        used_b.add(j)
        pairs.append((float(a[i]), float(b[j])))
    return sorted(pairs)
