#!/usr/bin/env python3
"""
Translations on the radial compactification Xi u S^1

Points at infinity are fixed. This is the dynamics behind vanishing-oscillation
symbols: every direction at infinity is its own (minimal) quasi-orbit.
"""

from typing import Dict, List

import numpy as np

from phasespace import ActionError, PhasePoint
from .base_action import HINT_CONSTANT, ActionSpec, OrbitKind, QuasiOrbit
from .states import Boundary, Interior, StateBatch, StatePoint

TWO_PI = 2.0 * np.pi


def _angle(theta: float) -> float:
    return float(np.mod(theta, TWO_PI))


class RadialVOAction(ActionSpec):
    """
    Sigma = Xi u S^1, Theta_X(Y) = Y + X inside, Theta_X(infinity(theta)) = infinity(theta)
    """

    ACTION_ID = "radial-vo"
    DESCRIPTION = "translations on the radial compactification; boundary points fixed"

    @property
    def boundary_alphabet(self) -> Dict[str, int]:
        return {"infinity": 1}

    def act(self, sigma: StatePoint, X: PhasePoint) -> StatePoint:
        sigma = self.validate_point(sigma)
        if isinstance(sigma, Interior):
            return Interior(sigma.point + X)
        return Boundary("infinity", (_angle(sigma.coordinates[0]),))

    def orbit(self, sigma: StatePoint, x: np.ndarray, xi: np.ndarray) -> StateBatch:
        sigma = self.validate_point(sigma)
        x = np.asarray(x, dtype=float)
        xi = np.asarray(xi, dtype=float)
        shape = np.broadcast_shapes(x.shape, xi.shape)
        if isinstance(sigma, Interior):
            px = np.broadcast_to(sigma.point.x[0] + x, shape)
            pxi = np.broadcast_to(sigma.point.xi[0] + xi, shape)
            return StateBatch("sphere", {
                "x": px,
                "xi": pxi,
                "at_infinity": np.zeros(shape, dtype=bool),
                "angle": np.arctan2(pxi, px),
            })
        return StateBatch("sphere", {
            "x": np.zeros(shape),
            "xi": np.zeros(shape),
            "at_infinity": np.ones(shape, dtype=bool),
            "angle": np.full(shape, _angle(sigma.coordinates[0])),
        })

    def _full(self) -> QuasiOrbit:
        return QuasiOrbit(
            id="full",
            kind=OrbitKind.FIRST,
            minimal=False,
            generating_point=Interior.at(0.0, 0.0),
            non_generic_cover=("infinity(*)",),
            approach_tolerance=1e-3,
            description="Xi together with the circle at infinity",
        )

    def _fixed_point(self, theta: float) -> QuasiOrbit:
        theta = _angle(theta)
        return QuasiOrbit(
            id=f"infinity({theta:.6f})",
            kind=OrbitKind.SECOND,
            minimal=True,
            generating_point=Boundary("infinity", (theta,)),
            closed_form_spectrum_hint=HINT_CONSTANT,
            description=f"fixed point at infinity in direction {theta:.6f}",
        )

    def quasi_orbit_table(self) -> Dict[str, QuasiOrbit]:
        full = self._full()
        point = self._fixed_point(0.0)
        return {full.id: full, point.id: point}

    def family_members(self, family: str, samples: int) -> List[QuasiOrbit]:
        if family != "infinity":
            return super().family_members(family, samples)
        return [self._fixed_point(theta) for theta in TWO_PI * np.arange(samples) / samples]

    def quasi_orbit_of(self, sigma: StatePoint) -> QuasiOrbit:
        sigma = self.validate_point(sigma)
        if isinstance(sigma, Interior):
            return self._full()
        return self._fixed_point(sigma.coordinates[0])

    def contains(self, E: QuasiOrbit, sigma: StatePoint) -> bool:
        sigma = self.validate_point(sigma)
        if E.id == "full":
            return True
        if not E.id.startswith("infinity("):
            raise ActionError(f"'{E.id}' is not a {self.ACTION_ID} quasi-orbit")
        if isinstance(sigma, Interior):
            return False
        target = E.generating_point.coordinates[0]
        delta = abs(_angle(sigma.coordinates[0]) - target)
        return min(delta, TWO_PI - delta) < 1e-9

    def chart_point(self, sigma: StatePoint) -> np.ndarray:
        sigma = self.validate_point(sigma)
        if isinstance(sigma, Interior):
            X = sigma.point.as_array()
            return X / (1.0 + np.linalg.norm(X))
        theta = sigma.coordinates[0]
        return np.array([np.cos(theta), np.sin(theta)])

    def random_state(self, rng: np.random.Generator) -> StatePoint:
        x, xi = rng.uniform(-2.0, 2.0, size=2)
        return Interior.at(x, xi)
