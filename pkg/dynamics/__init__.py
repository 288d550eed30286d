#!/usr/bin/env python3
"""
Dynamics Package Initialization
Auto-registers all catalog actions
"""

from .states import Interior, Boundary, StatePoint, StateBatch
from .base_action import (
    ActionSpec,
    ActionRegistry,
    OrbitKind,
    QuasiOrbit,
    action_registry,
    HINT_CONSTANT,
    HINT_FOURIER_MULTIPLIER,
    HINT_MULTIPLICATION,
)
from .translation import TranslationAction
from .radial import RadialVOAction
from .torus import TorusAPAction
from .vo_ap import VOtimesAPAction
from .tensor import VOtensorVOAction
from .quantum_plane import RealQuantumPlaneAction
from .sigma_symbols import (
    StateSymbol,
    ExpressionSymbol,
    RadialProfileSymbol,
    TorusSymbol,
    ProductSymbol,
    TensorSymbol,
    SYMBOL_CATALOG,
    named_symbol,
    expression_symbol,
)
from .orbits import (
    PulledBackFamily,
    act,
    pullback_symbol,
    quasi_orbit_of,
    classify_kind,
    non_generic_suborbits,
    contains,
    state_distance,
    random_state,
    sample_orbit_points,
    approach_distance,
    group_law_residual,
    equivariance_residual,
    ergodic_average,
    task_rng,
)

# Auto-register all actions
action_registry.register_action(TranslationAction)
action_registry.register_action(RadialVOAction)
action_registry.register_action(TorusAPAction)
action_registry.register_action(VOtimesAPAction)
action_registry.register_action(VOtensorVOAction)
action_registry.register_action(RealQuantumPlaneAction)


# Convenience functions
def create_action(action_id: str, **params) -> ActionSpec:
    """
    Instantiate a catalog action by id

    Args:
        action_id: One of the registered ids
        **params: Action parameters

    Returns:
        ActionSpec instance
    """
    return action_registry.create(action_id, **params)


def list_actions() -> list:
    """Registered action ids, sorted"""
    return action_registry.ids()


__all__ = [
    "Interior",
    "Boundary",
    "StatePoint",
    "StateBatch",
    "ActionSpec",
    "ActionRegistry",
    "OrbitKind",
    "QuasiOrbit",
    "action_registry",
    "HINT_CONSTANT",
    "HINT_FOURIER_MULTIPLIER",
    "HINT_MULTIPLICATION",
    "TranslationAction",
    "RadialVOAction",
    "TorusAPAction",
    "VOtimesAPAction",
    "VOtensorVOAction",
    "RealQuantumPlaneAction",
    "StateSymbol",
    "ExpressionSymbol",
    "RadialProfileSymbol",
    "TorusSymbol",
    "ProductSymbol",
    "TensorSymbol",
    "SYMBOL_CATALOG",
    "named_symbol",
    "expression_symbol",
    "PulledBackFamily",
    "act",
    "pullback_symbol",
    "quasi_orbit_of",
    "classify_kind",
    "non_generic_suborbits",
    "contains",
    "state_distance",
    "random_state",
    "sample_orbit_points",
    "approach_distance",
    "group_law_residual",
    "equivariance_residual",
    "ergodic_average",
    "task_rng",
    "create_action",
    "list_actions",
]
