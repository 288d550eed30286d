#!/usr/bin/env python3
"""
Translation action of Xi on itself
"""

from typing import Dict

import numpy as np

from phasespace import ActionError, PhasePoint
from .base_action import ActionSpec, OrbitKind, QuasiOrbit
from .states import Interior, StateBatch, StatePoint


class TranslationAction(ActionSpec):
    """
    Sigma = Xi with Theta_X(Y) = Y + X

    The single quasi-orbit is Xi itself: minimal and of the first kind.
    Hamiltonians of decaying symbols are compact.
    """

    ACTION_ID = "translation"
    DESCRIPTION = "Xi acting on itself by translations"

    def act(self, sigma: StatePoint, X: PhasePoint) -> StatePoint:
        sigma = self.validate_point(sigma)
        return Interior(sigma.point + X)

    def orbit(self, sigma: StatePoint, x: np.ndarray, xi: np.ndarray) -> StateBatch:
        sigma = self.validate_point(sigma)
        return StateBatch("phase", {
            "x": sigma.point.x[0] + np.asarray(x, dtype=float),
            "xi": sigma.point.xi[0] + np.asarray(xi, dtype=float),
        })

    def quasi_orbit_table(self) -> Dict[str, QuasiOrbit]:
        return {
            "Xi": QuasiOrbit(
                id="Xi",
                kind=OrbitKind.FIRST,
                minimal=True,
                generating_point=Interior.at(0.0, 0.0),
                description="the whole phase space",
            )
        }

    def quasi_orbit_of(self, sigma: StatePoint) -> QuasiOrbit:
        self.validate_point(sigma)
        return self.quasi_orbit_table()["Xi"]

    def contains(self, E: QuasiOrbit, sigma: StatePoint) -> bool:
        if E.id != "Xi":
            raise ActionError(f"'{E.id}' is not a {self.ACTION_ID} quasi-orbit")
        self.validate_point(sigma)
        return True

    def chart_point(self, sigma: StatePoint) -> np.ndarray:
        return self.validate_point(sigma).point.as_array()

    def random_state(self, rng: np.random.Generator) -> StatePoint:
        x, xi = rng.uniform(-2.0, 2.0, size=2)
        return Interior.at(x, xi)
