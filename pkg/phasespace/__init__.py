#!/usr/bin/env python3
"""
Phase-space primitives: points, the symplectic form, grids, symbol
expressions and spectral sets
"""

from .errors import (
    OrbitSpecError,
    SymbolSyntaxError,
    UnknownIdentifierError,
    ArityError,
    SymbolDomainError,
    GridError,
    DimensionError,
    ActionError,
    ConfigError,
    NumericalError,
    AcceptanceError,
)
from .points import PhasePoint, ORIGIN, symplectic_form
from .grid import Grid, make_grid, check_hbar
from .symbols import (
    Num,
    Var,
    Unary,
    Binary,
    Call,
    SymbolExpr,
    PhaseFunction,
    parse_symbol,
    parse_constant,
    pretty_print,
    eval_symbol,
    evaluate_array,
    as_phase_function,
    variable_names,
)
from .spectral_set import SpectralSet

__all__ = [
    "OrbitSpecError",
    "SymbolSyntaxError",
    "UnknownIdentifierError",
    "ArityError",
    "SymbolDomainError",
    "GridError",
    "DimensionError",
    "ActionError",
    "ConfigError",
    "NumericalError",
    "AcceptanceError",
    "PhasePoint",
    "ORIGIN",
    "symplectic_form",
    "Grid",
    "make_grid",
    "check_hbar",
    "Num",
    "Var",
    "Unary",
    "Binary",
    "Call",
    "SymbolExpr",
    "PhaseFunction",
    "parse_symbol",
    "parse_constant",
    "pretty_print",
    "eval_symbol",
    "evaluate_array",
    "as_phase_function",
    "variable_names",
    "SpectralSet",
]
