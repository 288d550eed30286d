#!/usr/bin/env python3
"""
Resolvent norms of Hermitian truncations
"""

from typing import Optional

import numpy as np
from scipy import linalg

from phasespace import NumericalError
from .quantization import OperatorMatrix


def resolvent_norm(M: OperatorMatrix, zeta: complex, eigenvalues: Optional[np.ndarray] = None) -> float:
    """
    ||(M - zeta)^-1|| for Hermitian M, i.e. 1 / dist(zeta, sp(M))

    Args:
        M: Hermitian operator matrix
        zeta: Spectral parameter off the real axis
        eigenvalues: Precomputed eigenvalues of M, if available

    Raises:
        NumericalError: If M is not Hermitian or zeta is real
    """
    zeta = complex(zeta)
    if zeta.imag == 0.0:
        raise NumericalError(f"resolvent parameter must be off the real axis, got {zeta}")
    if not M.is_hermitian:
        raise NumericalError(f"resolvent norm needs a Hermitian matrix (defect {M.hermitian_defect:.3e})")
    if eigenvalues is None:
        eigenvalues = linalg.eigvalsh(M.entries)
    return float(1.0 / np.min(np.abs(np.asarray(eigenvalues) - zeta)))
