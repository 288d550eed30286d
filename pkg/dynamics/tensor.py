#!/usr/bin/env python3
"""
Tensor product of two vanishing-oscillation systems: Sigma = [-inf, inf]^2

Each factor is the two-point compactification of a line. Coordinates at
infinity are stored as +-inf, so symbols evaluate their limits directly.
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
from .states import Boundary, Interior, StateBatch, StatePoint

_SIGNS = {"+": 1.0, "-": -1.0}


def _sign_label(s: float) -> str:
    return "+" if s > 0 else "-"


class VOtensorVOAction(ActionSpec):
    """
    Theta_(x,xi)(y, eta) = (y + x, eta + xi) with inf + x = inf

    Boundary tags:
        omega(s, eta):   y = s*inf, eta finite
        omega*(y, s):    y finite, eta = s*inf
        corner(s, s*):   both infinite
    """

    ACTION_ID = "vo-tensor-vo"
    DESCRIPTION = "product of two-point compactified lines"

    @property
    def boundary_alphabet(self) -> Dict[str, int]:
        return {"omega": 2, "omega*": 2, "corner": 2}

    def _validate_boundary(self, sigma: Boundary) -> None:
        a, b = sigma.coordinates
        signs = {"omega": (a,), "omega*": (b,), "corner": (a, b)}[sigma.tag]
        finite = {"omega": (b,), "omega*": (a,), "corner": ()}[sigma.tag]
        if any(s not in (-1.0, 1.0) for s in signs):
            raise ActionError(f"{sigma}: infinite directions must be +1 or -1")
        if any(not np.isfinite(v) for v in finite):
            raise ActionError(f"{sigma}: finite coordinate expected")

    def extended(self, sigma: StatePoint) -> tuple:
        """(y, eta) with +-inf for infinite coordinates"""
        sigma = self.validate_point(sigma)
        if isinstance(sigma, Interior):
            return sigma.point.x[0], sigma.point.xi[0]
        a, b = sigma.coordinates
        if sigma.tag == "omega":
            return a * np.inf, b
        if sigma.tag == "omega*":
            return a, b * np.inf
        return a * np.inf, b * np.inf

    @staticmethod
    def from_extended(y: float, eta: float) -> StatePoint:
        if np.isfinite(y) and np.isfinite(eta):
            return Interior.at(y, eta)
        if np.isfinite(eta):
            return Boundary("omega", (np.sign(y), eta))
        if np.isfinite(y):
            return Boundary("omega*", (y, np.sign(eta)))
        return Boundary("corner", (np.sign(y), np.sign(eta)))

    def act(self, sigma: StatePoint, X: PhasePoint) -> StatePoint:
        y, eta = self.extended(sigma)
        return self.from_extended(y + X.x[0], eta + X.xi[0])

    def orbit(self, sigma: StatePoint, x: np.ndarray, xi: np.ndarray) -> StateBatch:
        y, eta = self.extended(sigma)
        x, xi = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(xi, dtype=float))
        return StateBatch("extended", {"y": y + x, "eta": eta + xi})

    def quasi_orbit_table(self) -> Dict[str, QuasiOrbit]:
        table = {
            "full": QuasiOrbit(
                id="full",
                kind=OrbitKind.FIRST,
                minimal=False,
                generating_point=Interior.at(0.0, 0.0),
                non_generic_cover=("omega+", "omega-", "omega*+", "omega*-"),
                approach_tolerance=1e-3,
                description="the closed square",
            )
        }
        for label, s in _SIGNS.items():
            table[f"omega{label}"] = QuasiOrbit(
                id=f"omega{label}",
                kind=OrbitKind.SECOND,
                minimal=False,
                generating_point=Boundary("omega", (s, 0.0)),
                non_generic_cover=(f"corner{label}+", f"corner{label}-"),
                closed_form_spectrum_hint=HINT_FOURIER_MULTIPLIER,
                approach_tolerance=1e-3,
                description=f"edge y = {label}inf",
            )
            table[f"omega*{label}"] = QuasiOrbit(
                id=f"omega*{label}",
                kind=OrbitKind.SECOND,
                minimal=False,
                generating_point=Boundary("omega*", (0.0, s)),
                non_generic_cover=(f"corner+{label}", f"corner-{label}"),
                closed_form_spectrum_hint=HINT_MULTIPLICATION,
                approach_tolerance=1e-3,
                description=f"edge eta = {label}inf",
            )
        for la, sa in _SIGNS.items():
            for lb, sb in _SIGNS.items():
                table[f"corner{la}{lb}"] = QuasiOrbit(
                    id=f"corner{la}{lb}",
                    kind=OrbitKind.SECOND,
                    minimal=True,
                    generating_point=Boundary("corner", (sa, sb)),
                    closed_form_spectrum_hint=HINT_CONSTANT,
                    description=f"corner ({la}inf, {lb}inf)",
                )
        return table

    def quasi_orbit_of(self, sigma: StatePoint) -> QuasiOrbit:
        sigma = self.validate_point(sigma)
        table = self.quasi_orbit_table()
        if isinstance(sigma, Interior):
            return table["full"]
        a, b = sigma.coordinates
        if sigma.tag == "omega":
            return table[f"omega{_sign_label(a)}"]
        if sigma.tag == "omega*":
            return table[f"omega*{_sign_label(b)}"]
        return table[f"corner{_sign_label(a)}{_sign_label(b)}"]

    def contains(self, E: QuasiOrbit, sigma: StatePoint) -> bool:
        if E.id not in self.quasi_orbit_table():
            raise ActionError(f"'{E.id}' is not a {self.ACTION_ID} quasi-orbit")
        y, eta = self.extended(sigma)
        if E.id == "full":
            return True
        if E.id.startswith("omega*"):
            return eta == _SIGNS[E.id[-1]] * np.inf
        if E.id.startswith("omega"):
            return y == _SIGNS[E.id[-1]] * np.inf
        return y == _SIGNS[E.id[-2]] * np.inf and eta == _SIGNS[E.id[-1]] * np.inf

    def chart_point(self, sigma: StatePoint) -> np.ndarray:
        y, eta = self.extended(sigma)
        return np.tanh(np.array([y, eta]))

    def random_state(self, rng: np.random.Generator) -> StatePoint:
        x, xi = rng.uniform(-2.0, 2.0, size=2)
        return Interior.at(x, xi)
