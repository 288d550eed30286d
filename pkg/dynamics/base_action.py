#!/usr/bin/env python3
"""
Base Action Interface
All catalog actions inherit from this
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Tuple, Type

import numpy as np

from phasespace import ActionError, PhasePoint
from config import settings
from .states import Boundary, Interior, StateBatch, StatePoint


class OrbitKind(str, Enum):
    """Kind of a quasi-orbit: first if its orbit algebra contains C(Xi)"""
    FIRST = "first"
    SECOND = "second"


# Hints telling the spectral toolkit how to get sp(H_sigma) without a matrix
HINT_MULTIPLICATION = "multiplication"
HINT_FOURIER_MULTIPLIER = "fourier-multiplier"
HINT_CONSTANT = "constant"
CLOSED_FORM_HINTS = (HINT_MULTIPLICATION, HINT_FOURIER_MULTIPLIER, HINT_CONSTANT)


@dataclass(frozen=True)
class QuasiOrbit:
    """
    One entry of an action's quasi-orbit table

    Attributes:
        id: Table id; family members carry their parameter, e.g. 'infinity(0.785398)'
        kind: First or second kind
        minimal: True when no proper sub-quasi-orbit exists
        generating_point: A point whose orbit closure is this quasi-orbit
        non_generic_cover: Ids of sub-quasi-orbits covering the non-generic part;
            a trailing '(*)' names a one-parameter family
        closed_form_spectrum_hint: One of CLOSED_FORM_HINTS, or None
        approach_tolerance: Chart distance within which orbit samples of the
            generating point reach every cover representative; None skips the check
        description: Human-readable description of the set
    """
    id: str
    kind: OrbitKind
    minimal: bool
    generating_point: StatePoint
    non_generic_cover: Tuple[str, ...] = ()
    closed_form_spectrum_hint: Optional[str] = None
    approach_tolerance: Optional[float] = None
    description: str = ""

    def __post_init__(self):
        if self.minimal and self.id != "Xi" and self.kind != OrbitKind.SECOND:
            raise ActionError(f"minimal quasi-orbit '{self.id}' must be of the second kind")
        if self.minimal != (len(self.non_generic_cover) == 0):
            raise ActionError(
                f"quasi-orbit '{self.id}': non-generic cover must be empty exactly when minimal"
            )
        if self.closed_form_spectrum_hint not in (None,) + CLOSED_FORM_HINTS:
            raise ActionError(f"unknown spectrum hint '{self.closed_form_spectrum_hint}'")


class ActionSpec(ABC):
    """
    Abstract base class for group actions Theta of Xi = R^2 on a state space

    Each catalog action implements this interface: the action itself (pointwise
    and vectorized), its boundary alphabet, and its analytic quasi-orbit table.
    """

    ACTION_ID: str = ""
    DESCRIPTION: str = ""
    INTERIOR_POINTS: bool = True
    ERGODIC: bool = False

    def __init__(self, n: int = 1):
        if n != 1:
            raise ActionError(f"{self.ACTION_ID}: only n = 1 is implemented, got n={n}")
        self.n = n

    # -- points -------------------------------------------------------------

    @property
    def boundary_alphabet(self) -> Dict[str, int]:
        """Boundary tags and the number of coordinates each carries"""
        return {}

    def validate_point(self, sigma: StatePoint) -> StatePoint:
        """
        Check that sigma is a point of this action's state space

        Raises:
            ActionError: If the tag is foreign or the coordinates are malformed
        """
        if isinstance(sigma, Interior):
            if not self.INTERIOR_POINTS:
                raise ActionError(f"{self.ACTION_ID} has no interior points; got {sigma}")
            if sigma.point.n != self.n:
                raise ActionError(f"{self.ACTION_ID}: expected n={self.n}, got n={sigma.point.n}")
            return sigma
        if not isinstance(sigma, Boundary):
            raise ActionError(f"not a state point: {sigma!r}")
        alphabet = self.boundary_alphabet
        if sigma.tag not in alphabet:
            allowed = ", ".join(sorted(alphabet)) or "none"
            raise ActionError(
                f"tag '{sigma.tag}' is not in the {self.ACTION_ID} alphabet (allowed: {allowed})"
            )
        if len(sigma.coordinates) != alphabet[sigma.tag]:
            raise ActionError(
                f"tag '{sigma.tag}' takes {alphabet[sigma.tag]} coordinates, got {len(sigma.coordinates)}"
            )
        if any(np.isnan(c) for c in sigma.coordinates):
            raise ActionError(f"coordinates of {sigma} must not be NaN")
        self._validate_boundary(sigma)
        return sigma

    def _validate_boundary(self, sigma: Boundary) -> None:
        """Hook for tag-specific checks"""

    @abstractmethod
    def random_state(self, rng: np.random.Generator) -> StatePoint:
        """Draw a base point from the action's reference distribution"""

    @abstractmethod
    def chart_point(self, sigma: StatePoint) -> np.ndarray:
        """Coordinates of sigma in a compact chart, used for distances"""

    def state_distance(self, sigma: StatePoint, tau: StatePoint) -> float:
        return float(np.linalg.norm(self.chart_point(sigma) - self.chart_point(tau)))

    # -- the action ---------------------------------------------------------

    @abstractmethod
    def act(self, sigma: StatePoint, X: PhasePoint) -> StatePoint:
        """Theta_X(sigma)"""

    @abstractmethod
    def orbit(self, sigma: StatePoint, x: np.ndarray, xi: np.ndarray) -> StateBatch:
        """Theta_X(sigma) for all X = (x, xi) at once, in the action's chart"""

    # -- quasi-orbits -------------------------------------------------------

    @abstractmethod
    def quasi_orbit_table(self) -> Dict[str, QuasiOrbit]:
        """Finite quasi-orbits plus one representative per family"""

    @abstractmethod
    def quasi_orbit_of(self, sigma: StatePoint) -> QuasiOrbit:
        """The quasi-orbit E with sigma generating E"""

    @abstractmethod
    def contains(self, E: QuasiOrbit, sigma: StatePoint) -> bool:
        """Whether sigma lies in the closed set E"""

    def cover(self, E: QuasiOrbit, samples: int = settings.DEFAULT_BOUNDARY_SAMPLES) -> List[QuasiOrbit]:
        """
        Expand E.non_generic_cover into quasi-orbits; families are sampled

        Args:
            E: A quasi-orbit of this action
            samples: Members drawn from each one-parameter family

        Returns:
            List of sub-quasi-orbits, in table order
        """
        table = self.quasi_orbit_table()
        members: List[QuasiOrbit] = []
        for ref in E.non_generic_cover:
            if ref.endswith("(*)"):
                members.extend(self.family_members(ref[:-3], samples))
            else:
                members.append(table[ref])
        return members

    def family_members(self, family: str, samples: int) -> List[QuasiOrbit]:
        raise ActionError(f"{self.ACTION_ID} has no quasi-orbit family '{family}'")

    def __repr__(self) -> str:
        return f"{type(self).__name__}()"


class ActionRegistry:
    """
    Registry of catalog actions, addressed by id string
    """

    def __init__(self):
        self.actions: Dict[str, Type[ActionSpec]] = {}

    def register_action(self, action_class: Type[ActionSpec]) -> None:
        """
        Register an action class under its ACTION_ID

        Args:
            action_class: ActionSpec subclass
        """
        if not action_class.ACTION_ID:
            raise ActionError(f"{action_class.__name__} has no ACTION_ID")
        self.actions[action_class.ACTION_ID] = action_class

    def ids(self) -> List[str]:
        return sorted(self.actions)

    def create(self, action_id: str, **params) -> ActionSpec:
        """
        Instantiate a catalog action

        Args:
            action_id: Catalog id, e.g. 'torus-ap'
            **params: Action parameters (e.g. frequency)

        Returns:
            ActionSpec instance

        Raises:
            ActionError: If the id is unknown or the parameters are rejected
        """
        if action_id not in self.actions:
            raise ActionError(
                f"unknown action '{action_id}' (known: {', '.join(self.ids())})"
            )
        try:
            return self.actions[action_id](**params)
        except TypeError as e:
            raise ActionError(f"bad parameters for '{action_id}': {e}")


# Global registry instance
action_registry = ActionRegistry()
