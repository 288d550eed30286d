#!/usr/bin/env python3
"""
Builtin scenarios

Each entry is kept as config text and loaded through the same parser as user
files, together with its expected result and the example it reproduces.
"""

import logging
from functools import lru_cache
from typing import Dict, List, Tuple

from dynamics import Boundary, TorusAPAction, named_symbol, pullback_symbol
from phasespace import SpectralSet, make_grid
from spectra import eigen_spectrum
from weyl import build_op_matrix
from .config_parser import load_scenario
from .models import CatalogEntry

logger = logging.getLogger(__name__)

_BUILTINS: Dict[str, Dict[str, str]] = {
    "vo-radial-tanh": {
        "expected": "sp_ess = R_asy(f) = {1}; finitely many eigenvalues below",
        "tag": "asymptotic range",
        "config": """
[action]
id = radial-vo

[symbol]
name = radial-tanh

[grid]
L = 8
N = 256

[run]
name = vo-radial-tanh
hbar = 1
base_points = (0,0); infinity(0)
experiments = spectrum, ess-spectrum
""",
    },
    "vo-times-ap": {
        "expected": "sp_ess = c * sp(Op(h)) with c = 0.5, h = cos + cos",
        "tag": "VO times AP product formula",
        "config": """
[action]
id = vo-ap
frequency = 1,0; 0,1

[symbol]
name = vo-times-harper

[grid]
L = 8
N = 256

[run]
name = vo-times-ap
hbar = 1/16
base_points = (0,0)
experiments = spectrum, ess-spectrum
""",
    },
    "vo-plus-ap": {
        "expected": "sp_ess = R_asy(g) + sp(Op(h)) = 1 + sp(Op(h))",
        "tag": "VO plus AP sum formula",
        "config": """
[action]
id = vo-ap
frequency = 1,0; 0,1

[symbol]
name = vo-plus-harper

[grid]
L = 8
N = 256

[run]
name = vo-plus-ap
hbar = 1/16
base_points = (0,0)
experiments = spectrum, ess-spectrum
""",
    },
    "vo-tensor-vo-tanh": {
        "expected": "sp_ess = f(omega x Omega*) u f(Omega x omega*) = [-1, 1]",
        "tag": "tensor product of VO systems",
        "config": """
[action]
id = vo-tensor-vo

[symbol]
name = tensor-tanh

[grid]
L = 8
N = 256

[run]
name = vo-tensor-vo-tanh
hbar = 1
base_points = (0,0)
experiments = spectrum, ess-spectrum
""",
    },
    "quantum-plane-grid": {
        "expected": "sp_ess[H_(1,1)] = sp[H_(1,0)] u sp[H_(0,1)]; H_(0,0) = f(0,0)",
        "tag": "real quantum plane",
        "config": """
[action]
id = real-quantum-plane

[symbol]
expr = gaussian(x)*gaussian(xi)

[grid]
L = 8
N = 512
ladder = 8:256, 12:512

[run]
name = quantum-plane-grid
hbar = 1
base_points = (1,1); (1,0); (0,1); (0,0)
experiments = spectrum, ess-spectrum, norm-profile
""",
    },
    "torus-harper": {
        "expected": "minimal: equal spectra at all base points, void discrete spectrum; sweep -> [-2, 2]",
        "tag": "minimal quasi-orbit (Harper)",
        "config": """
[action]
id = torus-ap
frequency = 1,0; 0,1

[symbol]
name = harper

[grid]
L = 8
N = 512

[run]
name = torus-harper
hbar = 1, 1/2, 1/4, 1/8, 1/16, 1/32
base_points = torus(0,0); torus(1,2)
experiments = spectrum, sweep, random
seed = 7
count = 5
""",
    },
    "gaussian-compact": {
        "expected": "compact: sp_ess = {0}, eigenvalues accumulate only at 0",
        "tag": "compact operator",
        "config": """
[action]
id = translation

[symbol]
expr = gaussian(x)*gaussian(xi)

[grid]
L = 8
N = 256

[run]
name = gaussian-compact
hbar = 1
base_points = (0,0)
experiments = spectrum, ess-spectrum
""",
    },
    "moyal-gaussians": {
        "expected": "Op(f # g) = Op(f)Op(g); f # g - fg - (i hbar/2){f,g} = O(hbar^2)",
        "tag": "deformed product",
        "config": """
[action]
id = translation

[symbol]
expr = gaussian(x)*gaussian(xi)
partner = gaussian(x - 0.5)*gaussian(xi + 0.25)

[grid]
L = 6
N = 256

[run]
name = moyal-gaussians
hbar = 1/4, 1/8, 1/16
base_points = (0,0)
experiments = moyal-check
""",
    },
    "quantum-disc-angular": {
        "expected": "sp_ess = R_asy(f) = [-1, 1] (limit cos(angle) on the boundary circle)",
        "tag": "quantum disc",
        "config": """
[action]
id = radial-vo

[symbol]
name = radial-angular

[grid]
L = 8
N = 256

[run]
name = quantum-disc-angular
hbar = 1
base_points = (0,0)
experiments = spectrum, ess-spectrum
""",
    },
}


def builtin_config_text(name: str) -> str:
    """
    Config text of a builtin scenario

    Raises:
        KeyError: If no builtin has this name
    """
    return _BUILTINS[name]["config"].lstrip("\n")


def builtin_names() -> List[str]:
    return sorted(_BUILTINS)


def builtin_catalog() -> List[CatalogEntry]:
    """All builtin scenarios, sorted by name"""
    return [
        CatalogEntry(
            scenario=load_scenario(builtin_config_text(name)),
            expected=_BUILTINS[name]["expected"],
            tag=_BUILTINS[name]["tag"],
        )
        for name in builtin_names()
    ]


@lru_cache(maxsize=None)
def ap_reference_spectrum(
    symbol_name: str,
    L: float,
    N: int,
    hbar: float,
    frequency: Tuple[Tuple[float, ...], ...],
) -> SpectralSet:
    """
    sp(Op(h)) for a named torus symbol h pulled back at theta = 0, computed once
    per grid and frequency

    Raises:
        ActionError: If the frequency matrix is malformed or h is not a torus symbol
    """
    action = TorusAPAction(frequency=[list(row) for row in frequency])
    origin = Boundary("torus", (0.0,) * action.dimension)
    F = pullback_symbol(named_symbol(symbol_name), action, origin)
    logger.info("reference spectrum of %s on L=%g, N=%d, hbar=%g", symbol_name, L, N, hbar)
    return eigen_spectrum(build_op_matrix(F, make_grid(L, N), hbar))
