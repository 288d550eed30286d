#!/usr/bin/env python3
"""
Products of vanishing-oscillation and almost-periodic dynamics

Sigma is the closure of Xi embedded as X -> (X, A.X mod 2 pi) inside
(Xi u S^1) x T^d. Its boundary S^1 x T^d is a union of minimal slices
{omega} x T^d on which Xi acts through the torus flow only.
"""

from typing import Dict, List, Optional, Sequence

import numpy as np

from phasespace import ActionError, PhasePoint
from .base_action import ActionSpec, OrbitKind, QuasiOrbit
from .states import Boundary, Interior, StateBatch, StatePoint
from .torus import frequency_matrix

TWO_PI = 2.0 * np.pi


class VOtimesAPAction(ActionSpec):
    """
    Interior points X carry torus coordinates A.X; boundary points are
    infinity-torus(omega, phi_1..phi_d) with the direction omega fixed.
    """

    ACTION_ID = "vo-ap"
    DESCRIPTION = "radial compactification times a torus flow"

    def __init__(self, frequency: Optional[Sequence[Sequence[float]]] = None, n: int = 1):
        super().__init__(n)
        self.frequency = frequency_matrix(frequency)
        self.dimension = self.frequency.shape[0]

    @property
    def boundary_alphabet(self) -> Dict[str, int]:
        return {"infinity-torus": 1 + self.dimension}

    def act(self, sigma: StatePoint, X: PhasePoint) -> StatePoint:
        sigma = self.validate_point(sigma)
        if isinstance(sigma, Interior):
            return Interior(sigma.point + X)
        omega = np.mod(sigma.coordinates[0], TWO_PI)
        phi = np.mod(np.asarray(sigma.coordinates[1:]) + self.frequency @ X.as_array(), TWO_PI)
        return Boundary("infinity-torus", (omega,) + tuple(phi))

    def orbit(self, sigma: StatePoint, x: np.ndarray, xi: np.ndarray) -> StateBatch:
        sigma = self.validate_point(sigma)
        x, xi = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(xi, dtype=float))
        shift = x[..., None] * self.frequency[:, 0] + xi[..., None] * self.frequency[:, 1]
        if isinstance(sigma, Interior):
            px = sigma.point.x[0] + x
            pxi = sigma.point.xi[0] + xi
            theta = np.mod(self.frequency @ sigma.point.as_array() + shift, TWO_PI)
            return StateBatch("sphere-torus", {
                "x": px,
                "xi": pxi,
                "at_infinity": np.zeros(x.shape, dtype=bool),
                "angle": np.arctan2(pxi, px),
                "theta": theta,
            })
        phi = np.asarray(sigma.coordinates[1:])
        return StateBatch("sphere-torus", {
            "x": np.zeros(x.shape),
            "xi": np.zeros(x.shape),
            "at_infinity": np.ones(x.shape, dtype=bool),
            "angle": np.full(x.shape, np.mod(sigma.coordinates[0], TWO_PI)),
            "theta": np.mod(phi + shift, TWO_PI),
        })

    def _full(self) -> QuasiOrbit:
        return QuasiOrbit(
            id="full",
            kind=OrbitKind.FIRST,
            minimal=False,
            generating_point=Interior.at(0.0, 0.0),
            non_generic_cover=("slice(*)",),
            description="Xi with its boundary S^1 x T^d",
        )

    def _slice(self, omega: float) -> QuasiOrbit:
        omega = float(np.mod(omega, TWO_PI))
        return QuasiOrbit(
            id=f"slice({omega:.6f})",
            kind=OrbitKind.SECOND,
            minimal=True,
            generating_point=Boundary("infinity-torus", (omega,) + (0.0,) * self.dimension),
            description=f"torus slice at infinity in direction {omega:.6f}",
        )

    def quasi_orbit_table(self) -> Dict[str, QuasiOrbit]:
        full = self._full()
        piece = self._slice(0.0)
        return {full.id: full, piece.id: piece}

    def family_members(self, family: str, samples: int) -> List[QuasiOrbit]:
        if family != "slice":
            return super().family_members(family, samples)
        return [self._slice(omega) for omega in TWO_PI * np.arange(samples) / samples]

    def quasi_orbit_of(self, sigma: StatePoint) -> QuasiOrbit:
        sigma = self.validate_point(sigma)
        if isinstance(sigma, Interior):
            return self._full()
        return self._slice(sigma.coordinates[0])

    def contains(self, E: QuasiOrbit, sigma: StatePoint) -> bool:
        sigma = self.validate_point(sigma)
        if E.id == "full":
            return True
        if not E.id.startswith("slice("):
            raise ActionError(f"'{E.id}' is not a {self.ACTION_ID} quasi-orbit")
        if isinstance(sigma, Interior):
            return False
        delta = abs(np.mod(sigma.coordinates[0], TWO_PI) - E.generating_point.coordinates[0])
        return min(delta, TWO_PI - delta) < 1e-9

    def chart_point(self, sigma: StatePoint) -> np.ndarray:
        sigma = self.validate_point(sigma)
        if isinstance(sigma, Interior):
            X = sigma.point.as_array()
            theta = self.frequency @ X
            disc = X / (1.0 + np.linalg.norm(X))
        else:
            omega = sigma.coordinates[0]
            theta = np.asarray(sigma.coordinates[1:])
            disc = np.array([np.cos(omega), np.sin(omega)])
        return np.concatenate([disc, np.cos(theta), np.sin(theta)])

    def random_state(self, rng: np.random.Generator) -> StatePoint:
        x, xi = rng.uniform(-2.0, 2.0, size=2)
        return Interior.at(x, xi)

    def __repr__(self) -> str:
        return f"VOtimesAPAction(frequency={self.frequency.tolist()})"
