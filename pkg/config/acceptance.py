#!/usr/bin/env python3
"""
Acceptance thresholds evaluated by --check.

One versioned table. Bump ACCEPTANCE_VERSION whenever a number changes.
"""

ACCEPTANCE_VERSION = 2

ACCEPTANCE_THRESHOLDS = {
    # quantization
    "oracle_equivalence": 1e-10,
    "multiplication_offdiagonal": 1e-12,
    "hermitian_defect": 1e-9,
    # deformed product
    "morphism_relative_error": 1e-3,
    "morphism_floor": 1e-10,
    "expansion_halving_ratio": 3.5,
    # spectra
    "orbit_equispectral": 5e-2,
    "spectral_inclusion": 5e-2,
    "essential_hausdorff": 5e-2,
    "asymptotic_neighbourhood": 0.1,
    "asymptotic_count_drift": 2,
    "pairwise_hausdorff": 5e-2,
    "norm_identity": 1e-2,
    # semiclassical sweep
    "sweep_final_distance": 0.1,
    "sweep_max_increase": 0.02,
    # ergodic averages
    "torus_monomial_average": 0.02,
    "decaying_average": 1e-3,
    # equivariance
    "equivariance_residual": 1e-10,
}


def threshold(name: str) -> float:
    """
    Look up one threshold

    Args:
        name: Key in ACCEPTANCE_THRESHOLDS

    Returns:
        The threshold value

    Raises:
        KeyError: If the name is not in the table
    """
    return ACCEPTANCE_THRESHOLDS[name]
