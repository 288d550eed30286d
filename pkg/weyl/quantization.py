#!/usr/bin/env python3
"""
Weyl quantization on a grid

For a grid x_j and the 2N quadrature nodes xi_m (half the dual spacing, same
Nyquist interval) the operator Op^hbar(F) has the matrix

    M_jk = (1/2N) sum_m F((x_j + x_k)/2, xi_m) exp(i (x_j - x_k) xi_m / hbar)

(the quadrature weights spacing * dxi / (2 pi hbar) equal 1/2N). Since
(x_j - x_k) xi_m / hbar = -pi (j - k) + 2 pi (j - k) m / 2N, every midpoint
line s = j + k needs one inverse FFT of length 2N:

    M_jk = (-1)^(j-k) ifft_m(F(mid_s, xi_m))[(j - k) mod 2N]

All offsets |j - k| < N get their own Fourier coefficient, so the kernel of
one box edge is never folded onto the other.
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Union

import numpy as np
import pandas as pd

from config import settings
from phasespace import Grid, GridError, NumericalError, PhaseFunction, as_phase_function, check_hbar

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OperatorMatrix:
    """
    Matrix of Op^hbar(F) on a grid

    Attributes:
        entries: N x N complex array (read-only)
        grid: The configuration grid
        hbar: Planck parameter in (0, 1]
        hermitian_defect: Frobenius norm of M - M^dagger before symmetrization
        provenance: Description of the symbol (and action, base point)
        symmetrized: Whether the Hermitian part was taken
    """
    entries: np.ndarray = field(repr=False)
    grid: Grid
    hbar: float
    hermitian_defect: float
    provenance: str = ""
    symmetrized: bool = False

    def __post_init__(self):
        if self.entries.shape != (self.grid.N, self.grid.N):
            raise GridError(f"matrix shape {self.entries.shape} does not match {self.grid}")
        self.entries.setflags(write=False)

    @property
    def N(self) -> int:
        return self.grid.N

    @property
    def is_hermitian(self) -> bool:
        return self.symmetrized or self.hermitian_defect == 0.0

    def norm(self) -> float:
        """Operator (spectral) norm"""
        return float(np.linalg.norm(self.entries, 2))

    def __matmul__(self, other):
        if isinstance(other, OperatorMatrix):
            return self.entries @ other.entries
        return self.entries @ other

    def __str__(self) -> str:
        return f"Op[{self.provenance}] on {self.grid}, hbar={self.hbar:g}"


def _check_samples(values: np.ndarray, bound: Optional[float], label: str) -> None:
    if not np.all(np.isfinite(values)):
        raise NumericalError(f"non-finite samples of '{label}'")
    if bound is not None:
        peak = float(np.max(np.abs(values))) if values.size else 0.0
        if peak > bound * (1.0 + 1e-9) + 1e-12:
            raise NumericalError(
                f"unbounded sample: |{label}| reaches {peak:.6g} above its declared bound {bound:g}"
            )


def _is_real(values: np.ndarray, declared: Optional[bool]) -> bool:
    if declared is not None:
        return declared
    return bool(np.isrealobj(values) or not np.any(np.imag(values)))


def _finalize(M: np.ndarray, grid: Grid, hbar: float, real: bool, label: str) -> OperatorMatrix:
    defect = float(np.linalg.norm(M - M.conj().T))
    if real:
        M = 0.5 * (M + M.conj().T)
    logger.debug("assembled %s, N=%d, hbar=%g, hermitian defect %.3e", label, grid.N, hbar, defect)
    return OperatorMatrix(
        entries=np.ascontiguousarray(M, dtype=complex),
        grid=grid,
        hbar=hbar,
        hermitian_defect=defect,
        provenance=label,
        symmetrized=real,
    )


def _assemble_from_lines(lines: np.ndarray, grid: Grid) -> np.ndarray:
    """
    M from the symbol sampled on the 2N-1 midpoint lines (rows) x momentum nodes

    With the 2N quadrature nodes every offset |j - k| < N is resolved. With the
    N dual nodes offsets are taken modulo N, i.e. the box is periodic.
    """
    N = grid.N
    n_xi = lines.shape[1]
    coefficients = np.fft.ifft(lines, axis=1)
    j = np.arange(N)
    J, K = np.meshgrid(j, j, indexing="ij")
    offset = J - K
    sign = np.where(offset % 2 == 0, 1.0, -1.0)
    return sign * coefficients[J + K, offset % n_xi]


def build_op_matrix(
    F: Union[PhaseFunction, callable],
    grid: Grid,
    hbar: float,
    provenance: Optional[str] = None,
) -> OperatorMatrix:
    """
    FFT assembly of Op^hbar(F), O(N^2 log N)

    Real symbols are returned as the Hermitian part (K + K^dagger)/2; the
    defect before symmetrization is recorded.

    Args:
        F: Phase function (symbol expression, pullback or callable (x, xi) -> values)
        grid: Configuration grid
        hbar: Planck parameter in (0, 1]
        provenance: Label stored on the result

    Returns:
        OperatorMatrix

    Raises:
        GridError: If hbar is outside (0, 1]
        NumericalError: If samples are non-finite or exceed the declared bound
    """
    hbar = check_hbar(hbar)
    F = as_phase_function(F)
    label = provenance or F.label
    lines = np.asarray(F(grid.midpoints()[:, None], grid.quadrature_nodes(hbar)[None, :]))
    _check_samples(lines, F.bound, label)
    M = _assemble_from_lines(lines, grid)
    return _finalize(M, grid, hbar, _is_real(lines, F.real), label)


def build_op_matrix_direct(
    F: Union[PhaseFunction, callable],
    grid: Grid,
    hbar: float,
    max_n: int = settings.DIRECT_MAX_N,
    provenance: Optional[str] = None,
) -> OperatorMatrix:
    """
    Brute-force quadrature of the same kernel, no FFT

    Oracle for build_op_matrix. Rows are evaluated one at a time, each entry
    as an explicit sum over the 2N quadrature nodes.

    Raises:
        GridError: If N exceeds max_n or hbar is out of range
        NumericalError: As for build_op_matrix
    """
    hbar = check_hbar(hbar)
    if grid.N > max_n:
        raise GridError(f"direct quadrature is limited to N <= {max_n}, got N={grid.N}")
    F = as_phase_function(F)
    label = provenance or F.label
    x = grid.nodes
    xi = grid.quadrature_nodes(hbar)
    N = grid.N
    M = np.zeros((N, N), dtype=complex)
    real = True
    for j in range(N):
        mid = 0.5 * (x[j] + x)
        values = np.asarray(F(mid[:, None], xi[None, :]))
        _check_samples(values, F.bound, label)
        real = real and _is_real(values, F.real)
        for k in range(N):
            phase = np.exp(1j * (x[j] - x[k]) * xi / hbar)
            M[j, k] = np.sum(values[k] * phase) / (2 * N)
    return _finalize(M, grid, hbar, real, label)


def half_node_shift(values: np.ndarray, grid: Grid) -> np.ndarray:
    """
    Spectral interpolation of node samples (axis 0) to x_j + spacing/2

    The Nyquist mode has no symmetric half-shift and is dropped.
    """
    alpha = 2.0 * np.pi * np.fft.fftfreq(grid.N, d=grid.spacing)
    factor = np.exp(1j * alpha * grid.spacing / 2.0)
    factor[grid.N // 2] = 0.0
    shifted = np.fft.ifft(np.fft.fft(values, axis=0) * factor[:, None], axis=0)
    if np.isrealobj(values):
        return shifted.real
    return shifted


def op_from_samples(sampled, provenance: str = "sampled symbol") -> OperatorMatrix:
    """
    Op^hbar of a SampledSymbol

    Even midpoint lines are the node samples; odd lines come from a spectral
    half-node shift in x. Only the N dual nodes are sampled, so the box is
    periodic, as it is for moyal_product.
    """
    grid, hbar = sampled.grid, sampled.hbar
    values = sampled.values
    N = grid.N
    lines = np.empty((2 * N - 1, N), dtype=np.result_type(values.dtype, float))
    lines[0::2] = values
    lines[1::2] = half_node_shift(values, grid)[: N - 1]
    _check_samples(lines, None, provenance)
    M = _assemble_from_lines(lines, grid)
    return _finalize(M, grid, hbar, _is_real(values, None), provenance)


def commutator_defect(grid: Grid, hbar: float) -> float:
    """
    max |([Op(x), Op(xi)] - i hbar) u| on a centred gaussian u

    Calibrates the sign convention: the canonical commutator is +i hbar.
    """
    x_op = build_op_matrix(PhaseFunction(lambda x, xi: x + 0.0 * xi, label="x", real=True), grid, hbar)
    xi_op = build_op_matrix(PhaseFunction(lambda x, xi: xi + 0.0 * x, label="xi", real=True), grid, hbar)
    u = np.exp(-grid.nodes ** 2)
    residual = x_op @ (xi_op @ u) - xi_op @ (x_op @ u) - 1j * hbar * u
    return float(np.max(np.abs(residual)))


def dump_matrix_csv(M: OperatorMatrix, path: Union[str, Path]) -> Path:
    """
    Write entries row-major as interleaved re,im pairs, one matrix row per line
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    entries = M.entries
    interleaved = np.empty((M.N, 2 * M.N))
    interleaved[:, 0::2] = entries.real
    interleaved[:, 1::2] = entries.imag
    pd.DataFrame(interleaved).to_csv(
        path, header=False, index=False, float_format=settings.CSV_FLOAT_FORMAT, lineterminator="\n"
    )
    return path
