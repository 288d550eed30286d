#!/usr/bin/env python3
"""
Linear flows on tori: the almost-periodic catalog entries
"""

import itertools
import logging
from typing import Dict, Optional, Sequence

import numpy as np

from phasespace import ActionError, PhasePoint
from .base_action import ActionSpec, OrbitKind, QuasiOrbit
from .states import Boundary, StateBatch, StatePoint

logger = logging.getLogger(__name__)

TWO_PI = 2.0 * np.pi
DEFAULT_FREQUENCY = ((1.0, 0.0), (0.0, np.sqrt(2.0)))


def frequency_matrix(frequency: Optional[Sequence[Sequence[float]]]) -> np.ndarray:
    """
    Validate a d x 2 frequency matrix A for the flow theta -> theta + A.X

    Minimality is asserted, not proven: A must have full rank and no integer
    vector k with |k_i| <= 6 may annihilate it.

    Raises:
        ActionError: If A is malformed or visibly non-minimal
    """
    A = np.asarray(DEFAULT_FREQUENCY if frequency is None else frequency, dtype=float)
    if A.ndim != 2 or A.shape[1] != 2 or A.shape[0] < 1:
        raise ActionError(f"frequency must be a d x 2 matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise ActionError("frequency entries must be finite")
    d = A.shape[0]
    if np.linalg.matrix_rank(A) < min(d, 2):
        raise ActionError("frequency matrix is rank deficient; the flow is not minimal")
    if d > 2:
        for k in itertools.product(range(-6, 7), repeat=d):
            if any(k) and np.linalg.norm(np.asarray(k) @ A) < 1e-9:
                raise ActionError(f"integer vector {k} annihilates the frequency matrix")
    return A


class TorusAPAction(ActionSpec):
    """
    Sigma = T^d with Theta_X(theta) = theta + A.X (mod 2 pi)

    The whole torus is one minimal quasi-orbit of the second kind, so every
    Hamiltonian has the same, purely essential, spectrum.
    """

    ACTION_ID = "torus-ap"
    DESCRIPTION = "linear flow on a torus (almost-periodic symbols)"
    INTERIOR_POINTS = False
    ERGODIC = True

    def __init__(self, frequency: Optional[Sequence[Sequence[float]]] = None, n: int = 1):
        super().__init__(n)
        self.frequency = frequency_matrix(frequency)
        self.dimension = self.frequency.shape[0]

    @property
    def boundary_alphabet(self) -> Dict[str, int]:
        return {"torus": self.dimension}

    def _angles(self, sigma: StatePoint) -> np.ndarray:
        return np.mod(np.asarray(self.validate_point(sigma).coordinates), TWO_PI)

    def act(self, sigma: StatePoint, X: PhasePoint) -> StatePoint:
        theta = self._angles(sigma) + self.frequency @ X.as_array()
        return Boundary("torus", tuple(np.mod(theta, TWO_PI)))

    def orbit(self, sigma: StatePoint, x: np.ndarray, xi: np.ndarray) -> StateBatch:
        theta0 = self._angles(sigma)
        x = np.asarray(x, dtype=float)
        xi = np.asarray(xi, dtype=float)
        x, xi = np.broadcast_arrays(x, xi)
        theta = theta0 + x[..., None] * self.frequency[:, 0] + xi[..., None] * self.frequency[:, 1]
        return StateBatch("torus", {"theta": np.mod(theta, TWO_PI)})

    def _torus(self) -> QuasiOrbit:
        return QuasiOrbit(
            id="torus",
            kind=OrbitKind.SECOND,
            minimal=True,
            generating_point=Boundary("torus", (0.0,) * self.dimension),
            description=f"the whole {self.dimension}-torus",
        )

    def quasi_orbit_table(self) -> Dict[str, QuasiOrbit]:
        return {"torus": self._torus()}

    def quasi_orbit_of(self, sigma: StatePoint) -> QuasiOrbit:
        self.validate_point(sigma)
        return self._torus()

    def contains(self, E: QuasiOrbit, sigma: StatePoint) -> bool:
        if E.id != "torus":
            raise ActionError(f"'{E.id}' is not a {self.ACTION_ID} quasi-orbit")
        self.validate_point(sigma)
        return True

    def chart_point(self, sigma: StatePoint) -> np.ndarray:
        theta = self._angles(sigma)
        return np.concatenate([np.cos(theta), np.sin(theta)])

    def random_state(self, rng: np.random.Generator) -> StatePoint:
        return Boundary("torus", tuple(rng.uniform(0.0, TWO_PI, size=self.dimension)))

    def __repr__(self) -> str:
        return f"TorusAPAction(frequency={self.frequency.tolist()})"
