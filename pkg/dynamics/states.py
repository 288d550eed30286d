#!/usr/bin/env python3
"""
Points of state spaces and vectorized batches of them

A state space Sigma carries a Xi-action. Its points are either interior
points (a copy of phase space sitting inside Sigma) or boundary points named
by a tag from the action's alphabet plus real coordinates.
"""

from dataclasses import dataclass, field
from typing import Dict, Tuple, Union

import numpy as np

from phasespace import PhasePoint


@dataclass(frozen=True)
class Interior:
    """A point of the copy of phase space inside Sigma"""
    point: PhasePoint

    @classmethod
    def at(cls, x: float, xi: float) -> "Interior":
        return cls(PhasePoint.of(x, xi))

    @property
    def tag(self) -> str:
        return "interior"

    @property
    def coordinates(self) -> Tuple[float, ...]:
        return self.point.x + self.point.xi

    def __str__(self) -> str:
        return str(self.point)


@dataclass(frozen=True)
class Boundary:
    """A point of Sigma outside phase space, e.g. a direction at infinity"""
    tag: str
    coordinates: Tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "coordinates", tuple(float(c) for c in self.coordinates))

    def __str__(self) -> str:
        coords = ",".join(_format_coordinate(c) for c in self.coordinates)
        return f"{self.tag}({coords})"


StatePoint = Union[Interior, Boundary]


def _format_coordinate(value: float) -> str:
    if np.isinf(value):
        return "inf" if value > 0 else "-inf"
    return f"{value:g}"


CHARTS = ("phase", "torus", "sphere", "sphere-torus", "extended")


@dataclass(frozen=True)
class StateBatch:
    """
    Many state points in one chart, as parallel coordinate arrays

    Charts and their coordinates:
        phase:        x, xi
        torus:        theta (shape (..., d))
        sphere:       x, xi, at_infinity (bool), angle
        sphere-torus: x, xi, at_infinity, angle, theta
        extended:     y, eta (entries may be +-inf)
    """
    chart: str
    coords: Dict[str, np.ndarray] = field(default_factory=dict)

    def __post_init__(self):
        if self.chart not in CHARTS:
            raise ValueError(f"unknown chart '{self.chart}'")

    def __getitem__(self, name: str) -> np.ndarray:
        return self.coords[name]

    @property
    def shape(self) -> Tuple[int, ...]:
        key = "theta" if self.chart == "torus" else next(iter(self.coords))
        array = self.coords[key]
        return array.shape[:-1] if key == "theta" else array.shape
