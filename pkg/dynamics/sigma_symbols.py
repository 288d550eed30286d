#!/usr/bin/env python3
"""
Symbols on state spaces

A symbol on Sigma is evaluated on StateBatches produced by an action's orbit
map. Free expressions only know phase space (and, for two variables, the
two-torus); symbols that need values at infinity are named catalog entries
carrying their boundary extension.
"""

from abc import ABC, abstractmethod
from typing import Callable, Dict, FrozenSet, Optional, Tuple

import numpy as np

from phasespace import ActionError, SymbolExpr, evaluate_array, parse_symbol
from .states import StateBatch


class StateSymbol(ABC):
    """
    A bounded function on a state space Sigma

    Attributes:
        name: Catalog name or expression text
        charts: Charts the symbol can be evaluated in
        bound: Bound on |f|, when known
        real: Whether the symbol is real-valued
    """

    charts: FrozenSet[str] = frozenset()

    def __init__(self, name: str, bound: Optional[float] = None, real: bool = True):
        self.name = name
        self.bound = bound
        self.real = real

    def supports(self, chart: str) -> bool:
        return chart in self.charts

    def evaluate(self, batch: StateBatch) -> np.ndarray:
        """
        Evaluate on a batch of state points

        Raises:
            ActionError: If the batch chart is not supported by this symbol
        """
        if not self.supports(batch.chart):
            raise ActionError(
                f"symbol '{self.name}' cannot be evaluated on the '{batch.chart}' chart "
                f"(supported: {', '.join(sorted(self.charts))})"
            )
        return self._evaluate(batch)

    @abstractmethod
    def _evaluate(self, batch: StateBatch) -> np.ndarray:
        pass

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name!r})"


class ExpressionSymbol(StateSymbol):
    """A parsed expression; on the torus chart x -> theta1 and xi -> theta2"""

    charts = frozenset({"phase", "torus"})

    def __init__(self, expr: SymbolExpr):
        super().__init__(expr.source, bound=expr.bound, real=True)
        self.expr = expr

    def _evaluate(self, batch: StateBatch) -> np.ndarray:
        if batch.chart == "phase":
            return evaluate_array(self.expr, x=batch["x"], xi=batch["xi"])
        theta = batch["theta"]
        if theta.shape[-1] != 2:
            raise ActionError(
                f"expression '{self.name}' needs a two-torus, got dimension {theta.shape[-1]}"
            )
        return evaluate_array(self.expr, x=theta[..., 0], xi=theta[..., 1])


class RadialProfileSymbol(StateSymbol):
    """
    Vanishing-oscillation symbol on the radial compactification

    Interior values come from `interior(x, xi)`, values on the circle at
    infinity from `limit(angle)`.
    """

    charts = frozenset({"phase", "sphere"})

    def __init__(
        self,
        name: str,
        interior: Callable[[np.ndarray, np.ndarray], np.ndarray],
        limit: Callable[[np.ndarray], np.ndarray],
        bound: Optional[float] = None,
    ):
        super().__init__(name, bound=bound, real=True)
        self.interior = interior
        self.limit = limit

    def _evaluate(self, batch: StateBatch) -> np.ndarray:
        inside = np.asarray(self.interior(batch["x"], batch["xi"]), dtype=float)
        if batch.chart == "phase":
            return inside
        at_infinity = batch["at_infinity"]
        if not np.any(at_infinity):
            return inside
        return np.where(at_infinity, self.limit(batch["angle"]), inside)

    def limit_values(self, angles: np.ndarray) -> np.ndarray:
        return np.broadcast_to(np.asarray(self.limit(angles), dtype=float), np.shape(angles))


class TorusSymbol(StateSymbol):
    """Trigonometric polynomial on the d-torus, evaluated on angles theta[..., d]"""

    charts = frozenset({"torus", "sphere-torus"})

    def __init__(self, name: str, func: Callable[[np.ndarray], np.ndarray], dimension: int,
                 bound: Optional[float] = None, real: bool = True):
        super().__init__(name, bound=bound, real=real)
        self.func = func
        self.dimension = dimension

    def _evaluate(self, batch: StateBatch) -> np.ndarray:
        theta = batch["theta"]
        if theta.shape[-1] != self.dimension:
            raise ActionError(
                f"symbol '{self.name}' lives on a {self.dimension}-torus, got dimension {theta.shape[-1]}"
            )
        return self.func(theta)


class ProductSymbol(StateSymbol):
    """g op h with g vanishing-oscillation and h almost periodic (op: times or plus)"""

    charts = frozenset({"sphere-torus"})

    def __init__(self, name: str, g: RadialProfileSymbol, h: TorusSymbol, op: str):
        if op not in ("times", "plus"):
            raise ActionError(f"product op must be 'times' or 'plus', got '{op}'")
        bound = None
        if g.bound is not None and h.bound is not None:
            bound = g.bound * h.bound if op == "times" else g.bound + h.bound
        super().__init__(name, bound=bound, real=g.real and h.real)
        self.g = g
        self.h = h
        self.op = op

    def _evaluate(self, batch: StateBatch) -> np.ndarray:
        sphere = StateBatch("sphere", {k: batch[k] for k in ("x", "xi", "at_infinity", "angle")})
        torus = StateBatch("torus", {"theta": batch["theta"]})
        g = self.g.evaluate(sphere)
        h = self.h.evaluate(torus)
        return g * h if self.op == "times" else g + h


class TensorSymbol(StateSymbol):
    """
    a(y) * b(eta) on the square compactification [-inf, inf]^2

    Attributes:
        a_limits: (a(-inf), a(+inf))
        b_limits: (b(-inf), b(+inf))
    """

    charts = frozenset({"phase", "extended"})

    def __init__(
        self,
        name: str,
        a: Callable[[np.ndarray], np.ndarray],
        b: Callable[[np.ndarray], np.ndarray],
        a_limits: Tuple[float, float],
        b_limits: Tuple[float, float],
        bound: Optional[float] = None,
    ):
        super().__init__(name, bound=bound, real=True)
        self.a = a
        self.b = b
        self.a_limits = a_limits
        self.b_limits = b_limits

    @staticmethod
    def _factor(func, limits, t: np.ndarray) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        finite = np.isfinite(t)
        values = np.asarray(func(np.where(finite, t, 0.0)), dtype=float)
        values = np.broadcast_to(values, t.shape)
        return np.where(finite, values, np.where(t > 0, limits[1], limits[0]))

    def _evaluate(self, batch: StateBatch) -> np.ndarray:
        if batch.chart == "phase":
            y, eta = batch["x"], batch["xi"]
        else:
            y, eta = batch["y"], batch["eta"]
        return self._factor(self.a, self.a_limits, y) * self._factor(self.b, self.b_limits, eta)


# ---------------------------------------------------------------------------
# Named catalog
# ---------------------------------------------------------------------------

def _radial_tanh(x, xi):
    return np.tanh((x * x + xi * xi) / 4.0)


def _radial_angular(x, xi):
    r = np.hypot(x, xi)
    safe = np.where(r > 0, r, 1.0)
    return np.where(r > 0, x * np.tanh(r) / safe, 0.0)


def _harper(theta):
    return np.cos(theta[..., 0]) + np.cos(theta[..., 1])


VO_TIMES_LIMIT = 0.5


def _make_catalog() -> Dict[str, Callable[[], StateSymbol]]:
    def radial_tanh():
        return RadialProfileSymbol("radial-tanh", _radial_tanh, lambda angle: np.ones_like(angle), bound=1.0)

    def radial_angular():
        return RadialProfileSymbol("radial-angular", _radial_angular, np.cos, bound=1.0)

    def harper():
        return TorusSymbol("harper", _harper, dimension=2, bound=2.0)

    def torus_monomial():
        return TorusSymbol("torus-monomial", lambda theta: np.exp(1j * theta[..., 0]),
                           dimension=2, bound=1.0, real=False)

    def vo_times_harper():
        c = VO_TIMES_LIMIT
        g = RadialProfileSymbol(
            "half-step",
            lambda x, xi: c * (1.0 + np.tanh((x * x + xi * xi) / 4.0)) / 2.0,
            lambda angle: np.full_like(angle, c),
            bound=c,
        )
        return ProductSymbol("vo-times-harper", g, harper(), "times")

    def vo_plus_harper():
        return ProductSymbol("vo-plus-harper", radial_tanh(), harper(), "plus")

    def tensor_tanh():
        return TensorSymbol("tensor-tanh", np.tanh, np.tanh, (-1.0, 1.0), (-1.0, 1.0), bound=1.0)

    return {
        "radial-tanh": radial_tanh,
        "radial-angular": radial_angular,
        "harper": harper,
        "torus-monomial": torus_monomial,
        "vo-times-harper": vo_times_harper,
        "vo-plus-harper": vo_plus_harper,
        "tensor-tanh": tensor_tanh,
    }


SYMBOL_CATALOG = _make_catalog()


def named_symbol(name: str) -> StateSymbol:
    """
    Look up a catalog symbol

    Raises:
        ActionError: If the name is not cataloged
    """
    if name not in SYMBOL_CATALOG:
        raise ActionError(f"unknown symbol '{name}' (known: {', '.join(sorted(SYMBOL_CATALOG))})")
    return SYMBOL_CATALOG[name]()


def expression_symbol(text: str, bound: Optional[float] = None) -> ExpressionSymbol:
    return ExpressionSymbol(parse_symbol(text, bound=bound))
