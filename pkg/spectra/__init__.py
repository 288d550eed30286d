#!/usr/bin/env python3
"""
Spectral toolkit: eigenvalues, set distances, truncation stability,
asymptotic ranges and essential-spectrum prediction
"""

from .eigen import eigen_spectrum
from .distances import hausdorff, union_closure, match_pairs, nearest_distances
from .stability import (
    StabilityReport,
    default_ladder,
    truncation_stability,
    truncation_stable_spectrum,
    isolated_eigenvalues,
)
from .asymptotic import asymptotic_range
from .essential import (
    EssentialSpectrumReport,
    predicted_ess_spectrum,
    predicted_spectrum,
    suborbit_spectrum,
    essential_window,
    essential_estimate,
    report_rows,
)

__all__ = [
    "eigen_spectrum",
    "hausdorff",
    "union_closure",
    "match_pairs",
    "nearest_distances",
    "StabilityReport",
    "default_ladder",
    "truncation_stability",
    "truncation_stable_spectrum",
    "isolated_eigenvalues",
    "asymptotic_range",
    "EssentialSpectrumReport",
    "predicted_ess_spectrum",
    "predicted_spectrum",
    "suborbit_spectrum",
    "essential_window",
    "essential_estimate",
    "report_rows",
]
