#!/usr/bin/env python3
"""
Dense Hermitian eigenvalue extraction with a residual contract
"""

import logging
from typing import Optional, Union

import numpy as np
from scipy import linalg

from config import settings
from phasespace import NumericalError, SpectralSet
from weyl import OperatorMatrix

logger = logging.getLogger(__name__)


def _hermitian_entries(M: Union[OperatorMatrix, np.ndarray]) -> np.ndarray:
    if isinstance(M, OperatorMatrix):
        if not M.is_hermitian:
            raise NumericalError(
                f"{M} is not Hermitian (defect {M.hermitian_defect:.3e}); symmetrize a real symbol first"
            )
        return M.entries
    A = np.asarray(M)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise NumericalError(f"expected a square matrix, got shape {A.shape}")
    scale = max(1.0, float(np.max(np.abs(A)))) if A.size else 1.0
    if np.max(np.abs(A - A.conj().T), initial=0.0) > 1e-12 * scale:
        raise NumericalError("matrix is not Hermitian")
    return A


def eigen_spectrum(
    M: Union[OperatorMatrix, np.ndarray],
    resolution: Optional[float] = None,
    residual_tol: float = settings.EIGEN_RESIDUAL_TOL,
) -> SpectralSet:
    """
    All eigenvalues of a Hermitian matrix

    Args:
        M: OperatorMatrix (resolution defaults to its grid's) or a plain array
            (resolution defaults to 0)
        resolution: Override for the resolution of the result
        residual_tol: Per-pair bound on ||Mv - lambda v|| relative to ||M||

    Returns:
        SpectralSet of the N eigenvalues, ascending

    Raises:
        NumericalError: If M is not Hermitian or a residual exceeds the bound
    """
    A = _hermitian_entries(M)
    if resolution is None:
        resolution = M.grid.resolution if isinstance(M, OperatorMatrix) else 0.0

    w, V = linalg.eigh(A)
    norm = max(float(np.max(np.abs(w), initial=0.0)), np.finfo(float).tiny)
    residuals = np.linalg.norm(A @ V - V * w[None, :], axis=0)
    worst = float(np.max(residuals, initial=0.0))
    if worst > residual_tol * norm:
        raise NumericalError(
            f"eigen-solver residual {worst:.3e} exceeds {residual_tol:g} * ||M|| = {residual_tol * norm:.3e}"
        )
    logger.debug("eigen_spectrum: n=%d, range [%.6g, %.6g], worst residual %.2e",
                 w.size, w[0] if w.size else np.nan, w[-1] if w.size else np.nan, worst)
    return SpectralSet(w, resolution)
