#!/usr/bin/env python3
"""
The real quantum plane: Xi acting on R^2 by dilations

Theta_(x,xi)(y, eta) = (e^x y, e^xi eta). The quasi-orbits are the four closed
quarter-planes, the four closed semi-axes and the origin.
"""

from typing import Dict

import numpy as np

from phasespace import ActionError, PhasePoint
from .base_action import (
    HINT_CONSTANT,
    HINT_FOURIER_MULTIPLIER,
    HINT_MULTIPLICATION,
    ActionSpec,
    OrbitKind,
    QuasiOrbit,
)
from .states import Interior, StateBatch, StatePoint

_SIGNS = {"+": 1.0, "-": -1.0}


def _label(value: float) -> str:
    if value > 0:
        return "+"
    if value < 0:
        return "-"
    return "0"


class RealQuantumPlaneAction(ActionSpec):
    """
    Sigma = R^2 (all points interior) with the dilation action

    Quasi-orbit ids:
        Q++, Q+-, Q-+, Q--  closed quarter-planes (first kind)
        X+, X-              closed semi-axes eta = 0 (second kind, multiplication operators)
        P+, P-              closed semi-axes y = 0 (second kind, Fourier multipliers)
        O                   the origin (fixed point)
    """

    ACTION_ID = "real-quantum-plane"
    DESCRIPTION = "dilations of R^2 (the real quantum plane)"

    def act(self, sigma: StatePoint, X: PhasePoint) -> StatePoint:
        sigma = self.validate_point(sigma)
        y, eta = sigma.point.x[0], sigma.point.xi[0]
        return Interior.at(np.exp(X.x[0]) * y, np.exp(X.xi[0]) * eta)

    def orbit(self, sigma: StatePoint, x: np.ndarray, xi: np.ndarray) -> StateBatch:
        sigma = self.validate_point(sigma)
        x, xi = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(xi, dtype=float))
        return StateBatch("phase", {
            "x": np.exp(x) * sigma.point.x[0],
            "xi": np.exp(xi) * sigma.point.xi[0],
        })

    def quasi_orbit_table(self) -> Dict[str, QuasiOrbit]:
        table: Dict[str, QuasiOrbit] = {}
        for ly, sy in _SIGNS.items():
            for le, se in _SIGNS.items():
                table[f"Q{ly}{le}"] = QuasiOrbit(
                    id=f"Q{ly}{le}",
                    kind=OrbitKind.FIRST,
                    minimal=False,
                    generating_point=Interior.at(sy, se),
                    non_generic_cover=(f"X{ly}", f"P{le}"),
                    approach_tolerance=1e-3,
                    description=f"closed quarter-plane sign(y)={ly}, sign(eta)={le}",
                )
        for label, s in _SIGNS.items():
            table[f"X{label}"] = QuasiOrbit(
                id=f"X{label}",
                kind=OrbitKind.SECOND,
                minimal=False,
                generating_point=Interior.at(s, 0.0),
                non_generic_cover=("O",),
                closed_form_spectrum_hint=HINT_MULTIPLICATION,
                approach_tolerance=1e-3,
                description=f"closed semi-axis {label}y >= 0, eta = 0",
            )
            table[f"P{label}"] = QuasiOrbit(
                id=f"P{label}",
                kind=OrbitKind.SECOND,
                minimal=False,
                generating_point=Interior.at(0.0, s),
                non_generic_cover=("O",),
                closed_form_spectrum_hint=HINT_FOURIER_MULTIPLIER,
                approach_tolerance=1e-3,
                description=f"closed semi-axis y = 0, {label}eta >= 0",
            )
        table["O"] = QuasiOrbit(
            id="O",
            kind=OrbitKind.SECOND,
            minimal=True,
            generating_point=Interior.at(0.0, 0.0),
            closed_form_spectrum_hint=HINT_CONSTANT,
            description="the origin",
        )
        return table

    def quasi_orbit_of(self, sigma: StatePoint) -> QuasiOrbit:
        sigma = self.validate_point(sigma)
        ly, le = _label(sigma.point.x[0]), _label(sigma.point.xi[0])
        table = self.quasi_orbit_table()
        if ly == "0" and le == "0":
            return table["O"]
        if le == "0":
            return table[f"X{ly}"]
        if ly == "0":
            return table[f"P{le}"]
        return table[f"Q{ly}{le}"]

    def contains(self, E: QuasiOrbit, sigma: StatePoint) -> bool:
        table = self.quasi_orbit_table()
        if E.id not in table:
            raise ActionError(f"'{E.id}' is not a {self.ACTION_ID} quasi-orbit")
        sigma = self.validate_point(sigma)
        y, eta = sigma.point.x[0], sigma.point.xi[0]
        if E.id == "O":
            return y == 0 and eta == 0
        if E.id.startswith("X"):
            return eta == 0 and _SIGNS[E.id[1]] * y >= 0
        if E.id.startswith("P"):
            return y == 0 and _SIGNS[E.id[1]] * eta >= 0
        return _SIGNS[E.id[1]] * y >= 0 and _SIGNS[E.id[2]] * eta >= 0

    def chart_point(self, sigma: StatePoint) -> np.ndarray:
        return self.validate_point(sigma).point.as_array()

    def random_state(self, rng: np.random.Generator) -> StatePoint:
        y, eta = rng.uniform(-2.0, 2.0, size=2)
        return Interior.at(y, eta)
