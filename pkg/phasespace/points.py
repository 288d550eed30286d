#!/usr/bin/env python3
"""
Phase-space points and the symplectic form
"""

from dataclasses import dataclass
from typing import Iterable, Tuple, Union

import numpy as np

from .errors import DimensionError

Number = Union[int, float]


def _as_tuple(values: Union[Number, Iterable[Number]]) -> Tuple[float, ...]:
    if np.isscalar(values):
        return (float(values),)
    return tuple(float(v) for v in values)


@dataclass(frozen=True)
class PhasePoint:
    """
    A point X = (x, xi) of the phase space R^n x R^n

    Attributes:
        x: Configuration coordinates
        xi: Momentum coordinates
    """
    x: Tuple[float, ...]
    xi: Tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "x", _as_tuple(self.x))
        object.__setattr__(self, "xi", _as_tuple(self.xi))
        if len(self.x) == 0:
            raise DimensionError("phase points need n >= 1")
        if len(self.x) != len(self.xi):
            raise DimensionError(
                f"x has {len(self.x)} entries but xi has {len(self.xi)}"
            )
        if not all(np.isfinite(self.x)) or not all(np.isfinite(self.xi)):
            raise DimensionError("phase point entries must be finite")

    @classmethod
    def of(cls, x: Union[Number, Iterable[Number]], xi: Union[Number, Iterable[Number]]) -> "PhasePoint":
        return cls(_as_tuple(x), _as_tuple(xi))

    @property
    def n(self) -> int:
        return len(self.x)

    def __add__(self, other: "PhasePoint") -> "PhasePoint":
        _check_dims(self, other)
        return PhasePoint(
            tuple(a + b for a, b in zip(self.x, other.x)),
            tuple(a + b for a, b in zip(self.xi, other.xi)),
        )

    def __neg__(self) -> "PhasePoint":
        return PhasePoint(tuple(-a for a in self.x), tuple(-a for a in self.xi))

    def as_array(self) -> np.ndarray:
        """Coordinates as one vector (x_1..x_n, xi_1..xi_n)"""
        return np.array(self.x + self.xi)

    def __str__(self) -> str:
        coords = ",".join(f"{v:g}" for v in self.x + self.xi)
        return f"({coords})"


ORIGIN = PhasePoint((0.0,), (0.0,))


def _check_dims(X: PhasePoint, Y: PhasePoint) -> None:
    if X.n != Y.n:
        raise DimensionError(f"dimension mismatch: n={X.n} vs n={Y.n}")


def symplectic_form(X: PhasePoint, Y: PhasePoint) -> float:
    """
    Symplectic form [[X, Y]] = x.eta - y.xi for X = (x, xi), Y = (y, eta)

    Args:
        X: First phase point
        Y: Second phase point

    Returns:
        The real number x.eta - y.xi

    Raises:
        DimensionError: If X and Y live in different dimensions
    """
    _check_dims(X, Y)
    return float(np.dot(X.x, Y.xi) - np.dot(Y.x, X.xi))
