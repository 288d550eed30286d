#!/usr/bin/env python3
"""
Finite spectral sets with a resolution
"""

from dataclasses import dataclass
from typing import Iterable, Tuple

import numpy as np


def _frozen_sorted(values: Iterable[float]) -> np.ndarray:
    array = np.sort(np.asarray(values, dtype=float).ravel())
    array.setflags(write=False)
    return array


@dataclass(frozen=True)
class SpectralSet:
    """
    Sorted multiset of reals; values closer than `resolution` count as one

    Attributes:
        values: Ascending values (read-only array)
        resolution: Merge scale epsilon >= 0
    """
    values: np.ndarray
    resolution: float = 0.0

    def __post_init__(self):
        if self.resolution < 0 or not np.isfinite(self.resolution):
            raise ValueError(f"resolution must be >= 0, got {self.resolution}")
        values = _frozen_sorted(self.values)
        if values.size and not np.all(np.isfinite(values)):
            raise ValueError("spectral values must be finite")
        object.__setattr__(self, "values", values)

    @classmethod
    def of(cls, values: Iterable[float], resolution: float = 0.0) -> "SpectralSet":
        return cls(np.asarray(list(values), dtype=float), float(resolution))

    def __len__(self) -> int:
        return int(self.values.size)

    def __iter__(self):
        return iter(self.values.tolist())

    def __eq__(self, other) -> bool:
        if not isinstance(other, SpectralSet):
            return NotImplemented
        return self.resolution == other.resolution and np.array_equal(self.values, other.values)

    __hash__ = None

    @property
    def empty(self) -> bool:
        return self.values.size == 0

    @property
    def hull(self) -> Tuple[float, float]:
        return float(self.values[0]), float(self.values[-1])

    def merged(self) -> "SpectralSet":
        """
        Greedy thinning: keep a value only if it is at least `resolution`
        above the last kept one. Idempotent; moves no value by more than
        the resolution.
        """
        if self.values.size == 0 or self.resolution == 0:
            kept = np.unique(self.values)
            return SpectralSet(kept, self.resolution)
        kept = [self.values[0]]
        for value in self.values[1:]:
            if value - kept[-1] >= self.resolution:
                kept.append(value)
        return SpectralSet(np.array(kept), self.resolution)

    def restrict(self, low: float, high: float) -> "SpectralSet":
        lo = np.searchsorted(self.values, low, side="left")
        hi = np.searchsorted(self.values, high, side="right")
        return SpectralSet(self.values[lo:hi], self.resolution)

    def scaled(self, factor: float) -> "SpectralSet":
        return SpectralSet(self.values * factor, self.resolution * abs(factor))

    def minkowski_sum(self, other: "SpectralSet") -> "SpectralSet":
        """{a + b}: the spectrum of a sum of commuting pieces"""
        sums = (self.values[:, None] + other.values[None, :]).ravel()
        return SpectralSet(sums, max(self.resolution, other.resolution))

    def with_resolution(self, resolution: float) -> "SpectralSet":
        return SpectralSet(self.values, resolution)

    def __str__(self) -> str:
        if self.empty:
            return "SpectralSet(empty)"
        lo, hi = self.hull
        return f"SpectralSet({len(self)} values in [{lo:.6g}, {hi:.6g}], eps={self.resolution:.3g})"
