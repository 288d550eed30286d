#!/usr/bin/env python3
"""
Operations on actions: orbits, pullbacks, quasi-orbit queries, equivariance
and ergodic averages
"""

import logging
from typing import Callable, List, Optional, Sequence, Union

import numpy as np

from config import settings
from phasespace import ActionError, PhaseFunction, PhasePoint, SymbolExpr
from .base_action import ActionSpec, OrbitKind, QuasiOrbit
from .sigma_symbols import ExpressionSymbol, StateSymbol
from .states import StatePoint

logger = logging.getLogger(__name__)

SymbolOnSigma = Union[StateSymbol, SymbolExpr]


def _as_state_symbol(f: SymbolOnSigma) -> StateSymbol:
    if isinstance(f, SymbolExpr):
        return ExpressionSymbol(f)
    if isinstance(f, StateSymbol):
        return f
    raise TypeError(f"not a symbol on a state space: {f!r}")


def task_rng(seed: int, index: int) -> np.random.Generator:
    """Independent, reproducible stream for task `index` of a run seeded with `seed`"""
    return np.random.default_rng([int(seed), int(index)])


def act(a: ActionSpec, sigma: StatePoint, X: PhasePoint) -> StatePoint:
    """
    Theta_X(sigma)

    Raises:
        ActionError: If sigma does not belong to the action's state space
    """
    return a.act(sigma, X)


class PulledBackFamily:
    """
    The equivariant family sigma -> F_sigma with F_sigma(X) = f(Theta_X(sigma))
    """

    def __init__(self, f: SymbolOnSigma, a: ActionSpec):
        self.symbol = _as_state_symbol(f)
        self.action = a

    def __call__(self, sigma: StatePoint, x, xi) -> np.ndarray:
        return self.symbol.evaluate(self.action.orbit(sigma, x, xi))

    def at(self, sigma: StatePoint) -> PhaseFunction:
        self.action.validate_point(sigma)
        origin = self.action.orbit(sigma, np.zeros(1), np.zeros(1))
        if not self.symbol.supports(origin.chart):
            raise ActionError(
                f"symbol '{self.symbol.name}' is not defined on the state space of "
                f"'{self.action.ACTION_ID}' (chart '{origin.chart}')"
            )
        symbol, action = self.symbol, self.action
        return PhaseFunction(
            lambda x, xi: symbol.evaluate(action.orbit(sigma, x, xi)),
            label=f"{symbol.name} o Theta[{sigma}]",
            bound=symbol.bound,
            real=symbol.real,
        )


def pullback_symbol(f: SymbolOnSigma, a: ActionSpec, sigma: StatePoint) -> PhaseFunction:
    """
    Pull a symbol on Sigma back to phase space along the orbit of sigma

    Args:
        f: Symbol on Sigma (catalog symbol or expression)
        a: The action
        sigma: Base point

    Returns:
        PhaseFunction F_sigma(X) = f(Theta_X(sigma))

    Raises:
        ActionError: If f cannot be evaluated on the action's state space
    """
    return PulledBackFamily(f, a).at(sigma)


def quasi_orbit_of(a: ActionSpec, sigma: StatePoint) -> QuasiOrbit:
    return a.quasi_orbit_of(sigma)


def classify_kind(E: QuasiOrbit) -> OrbitKind:
    """
    First or second kind, as recorded in the quasi-orbit table

    Raises:
        ActionError: If the entry contradicts the dichotomy for minimal orbits
    """
    if E.minimal and E.id != "Xi" and E.kind != OrbitKind.SECOND:
        raise ActionError(f"minimal quasi-orbit '{E.id}' labeled {E.kind.value}")
    return E.kind


def non_generic_suborbits(
    a: ActionSpec,
    E: QuasiOrbit,
    samples: int = settings.DEFAULT_BOUNDARY_SAMPLES,
) -> List[QuasiOrbit]:
    """
    Quasi-orbits covering the non-generic part of a first-kind quasi-orbit

    Args:
        a: The action owning E
        E: Quasi-orbit of the first kind
        samples: Members drawn from one-parameter families of sub-orbits

    Returns:
        The covering, in table order

    Raises:
        ActionError: If E is of the second kind
    """
    if classify_kind(E) != OrbitKind.FIRST:
        raise ActionError(
            f"'{E.id}' is of the second kind: its Hamiltonians have purely essential spectrum"
        )
    return a.cover(E, samples)


def contains(a: ActionSpec, E: QuasiOrbit, sigma: StatePoint) -> bool:
    return a.contains(E, sigma)


def state_distance(a: ActionSpec, sigma: StatePoint, tau: StatePoint) -> float:
    return a.state_distance(sigma, tau)


def random_state(a: ActionSpec, rng: np.random.Generator) -> StatePoint:
    return a.random_state(rng)


def sample_orbit_points(
    a: ActionSpec,
    sigma: StatePoint,
    radii: Sequence[float],
    angles: Sequence[float],
) -> List[StatePoint]:
    """Theta_X(sigma) for X on the polar grid radii x angles"""
    points = []
    for r in radii:
        for theta in angles:
            points.append(a.act(sigma, PhasePoint.of(r * np.cos(theta), r * np.sin(theta))))
    return points


def approach_distance(
    a: ActionSpec,
    sigma: StatePoint,
    target: StatePoint,
    radii: Sequence[float],
    angles: Sequence[float],
) -> float:
    """Closest chart distance from the sampled orbit of sigma to target"""
    return min(a.state_distance(p, target) for p in sample_orbit_points(a, sigma, radii, angles))


def group_law_residual(a: ActionSpec, samples: int, seed: int, spread: float = 2.0) -> float:
    """
    max |Theta_X(Theta_Y(sigma)) - Theta_(X+Y)(sigma)| in the action's chart
    over seeded random (sigma, X, Y)
    """
    worst = 0.0
    for index in range(samples):
        rng = task_rng(seed, index)
        sigma = a.random_state(rng)
        X = PhasePoint.of(*rng.uniform(-spread, spread, size=2))
        Y = PhasePoint.of(*rng.uniform(-spread, spread, size=2))
        lhs = a.act(a.act(sigma, Y), X)
        rhs = a.act(sigma, X + Y)
        worst = max(worst, a.state_distance(lhs, rhs))
    return worst


Family = Callable[[StatePoint, np.ndarray, np.ndarray], np.ndarray]


def equivariance_residual(
    F: Family,
    a: ActionSpec,
    samples: int,
    seed: int,
    spread: float = 2.0,
) -> float:
    """
    max over random (sigma, X, Y) of |F(Theta_Y sigma, X) - F(sigma, X + Y)|

    Args:
        F: Family (sigma, x, xi) -> values, e.g. a PulledBackFamily
        a: The action
        samples: Number of seeded samples
        seed: Run seed; sample i uses the stream (seed, i)
        spread: X and Y are uniform on [-spread, spread]^2

    Returns:
        The largest residual seen
    """
    worst = 0.0
    for index in range(samples):
        rng = task_rng(seed, index)
        sigma = a.random_state(rng)
        x, xi = rng.uniform(-spread, spread, size=2)
        y, eta = rng.uniform(-spread, spread, size=2)
        moved = a.act(sigma, PhasePoint.of(y, eta))
        lhs = np.asarray(F(moved, np.array(x), np.array(xi)))
        rhs = np.asarray(F(sigma, np.array(x + y), np.array(xi + eta)))
        worst = max(worst, float(np.max(np.abs(lhs - rhs))))
    logger.debug("equivariance residual over %d samples: %.3e", samples, worst)
    return worst


def ergodic_average(
    g: SymbolOnSigma,
    a: ActionSpec,
    sigma: StatePoint,
    R: float,
    quadrature_points: int = settings.DEFAULT_QUADRATURE_POINTS,
) -> complex:
    """
    Ball average (1/|B_R|) int_{B_R} g(Theta_X(sigma)) dX

    Tensor-product midpoint rule on [-R, R]^2 with `quadrature_points` nodes
    per axis, restricted to the nodes inside the ball.

    Raises:
        ValueError: If R is not positive
    """
    if R <= 0:
        raise ValueError(f"R must be positive, got {R}")
    q = int(quadrature_points)
    step = 2.0 * R / q
    nodes = -R + (np.arange(q) + 0.5) * step
    x, xi = np.meshgrid(nodes, nodes, indexing="ij")
    inside = x * x + xi * xi <= R * R
    values = _as_state_symbol(g).evaluate(a.orbit(sigma, x[inside], xi[inside]))
    return complex(np.mean(values))
