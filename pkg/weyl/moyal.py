#!/usr/bin/env python3
"""
Deformed (Moyal) product and Poisson bracket of sampled symbols

Conventions, checked by the canonical commutator [Op(x), Op(xi)] = i hbar:

    {f, g} = d_x f d_xi g - d_xi f d_x g            ({x, xi} = 1)
    f #hbar g = f g + (i hbar / 2) {f, g} + O(hbar^2)

The product is computed in the mixed representation. Writing
f(x, xi) = sum_k f_k(x) exp(i b_k xi) with hbar b_k / 2 = k spacing / 2,

    f # g (x, xi) = sum_{k, k'} f_k(x - hbar b_k'/2) g_k'(x + hbar b_k/2) exp(i (b_k + b_k') xi)

The x-shifts are half multiples of the spacing and are applied spectrally,
so the box is treated as periodic in both variables.
"""

import logging
from dataclasses import dataclass, field

import numpy as np

from phasespace import Grid, GridError, NumericalError, as_phase_function, check_hbar

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SampledSymbol:
    """
    Symbol values on the phase grid x_j (axis 0) x xi_m (axis 1)
    """
    values: np.ndarray = field(repr=False)
    grid: Grid
    hbar: float

    def __post_init__(self):
        N = self.grid.N
        if self.values.shape != (N, N):
            raise GridError(f"sampled symbol must be {N} x {N}, got {self.values.shape}")
        if not np.all(np.isfinite(self.values)):
            raise NumericalError("sampled symbol has non-finite entries")

    def _check_partner(self, other: "SampledSymbol") -> None:
        if self.grid != other.grid or self.hbar != other.hbar:
            raise GridError(
                f"grid mismatch: {self.grid}, hbar={self.hbar:g} vs {other.grid}, hbar={other.hbar:g}"
            )

    def __add__(self, other: "SampledSymbol") -> "SampledSymbol":
        self._check_partner(other)
        return SampledSymbol(self.values + other.values, self.grid, self.hbar)

    def __sub__(self, other: "SampledSymbol") -> "SampledSymbol":
        self._check_partner(other)
        return SampledSymbol(self.values - other.values, self.grid, self.hbar)

    def __mul__(self, other):
        if isinstance(other, SampledSymbol):
            self._check_partner(other)
            return SampledSymbol(self.values * other.values, self.grid, self.hbar)
        return SampledSymbol(self.values * other, self.grid, self.hbar)

    __rmul__ = __mul__

    def sup_norm(self, interior: int = 0) -> float:
        """max |values|, optionally ignoring `interior` cells along every edge"""
        values = self.values
        if interior:
            values = values[interior:-interior, interior:-interior]
        return float(np.max(np.abs(values)))


def sample_symbol(F, grid: Grid, hbar: float) -> SampledSymbol:
    """Sample a phase function on the grid nodes and the dual nodes for hbar"""
    hbar = check_hbar(hbar)
    F = as_phase_function(F)
    values = np.asarray(F(grid.nodes[:, None], grid.dual_nodes(hbar)[None, :]))
    return SampledSymbol(np.array(values), grid, hbar)


def moyal_product(f: SampledSymbol, g: SampledSymbol) -> SampledSymbol:
    """
    f #hbar g for the translation action, O(N^3 log N)

    Args:
        f: Left factor
        g: Right factor on the same grid and hbar

    Returns:
        SampledSymbol of the product

    Raises:
        GridError: On mismatched grids or hbar
    """
    f._check_partner(g)
    grid = f.grid
    N, h = grid.N, grid.spacing

    # xi-Fourier coefficients (columns: signed mode k), then x-Fourier transforms
    Ff = np.fft.fft(np.fft.fft(f.values, axis=1) / N, axis=0)
    Fg = np.fft.fft(np.fft.fft(g.values, axis=1) / N, axis=0)

    alpha = 2.0 * np.pi * np.fft.fftfreq(N, d=h)
    shifts = np.fft.fftfreq(N) * N * h / 2.0
    E = np.exp(1j * alpha[:, None] * shifts[None, :])

    modes = np.arange(N)
    out = np.zeros((N, N), dtype=complex)
    for kp in range(N):
        A = np.fft.ifft(Ff * np.conj(E[:, kp])[:, None], axis=0)
        B = np.fft.ifft(Fg[:, kp][:, None] * E, axis=0)
        out[:, (modes + kp) % N] += A * B

    product = N * np.fft.ifft(out, axis=1)
    logger.debug("moyal product on %s, hbar=%g", grid, f.hbar)
    return SampledSymbol(product, grid, f.hbar)


def _central_difference(values: np.ndarray, step: float, axis: int) -> np.ndarray:
    """Fourth-order central difference; periodic at the box edges"""
    plus1 = np.roll(values, -1, axis=axis)
    minus1 = np.roll(values, 1, axis=axis)
    plus2 = np.roll(values, -2, axis=axis)
    minus2 = np.roll(values, 2, axis=axis)
    return (8.0 * (plus1 - minus1) - (plus2 - minus2)) / (12.0 * step)


def poisson_bracket(f: SampledSymbol, g: SampledSymbol) -> SampledSymbol:
    """
    {f, g} = d_x f d_xi g - d_xi f d_x g by fourth-order finite differences

    Values within two cells of the box edges use periodic neighbours.

    Raises:
        GridError: On mismatched grids or hbar
    """
    f._check_partner(g)
    h = f.grid.spacing
    dxi = f.grid.dual_spacing(f.hbar)
    fx = _central_difference(f.values, h, 0)
    fxi = _central_difference(f.values, dxi, 1)
    gx = _central_difference(g.values, h, 0)
    gxi = _central_difference(g.values, dxi, 1)
    return SampledSymbol(fx * gxi - fxi * gx, f.grid, f.hbar)


def expansion_remainder(f: SampledSymbol, g: SampledSymbol) -> float:
    """sup |f # g - f g - (i hbar / 2) {f, g}|"""
    remainder = moyal_product(f, g) - f * g - poisson_bracket(f, g) * (0.5j * f.hbar)
    return remainder.sup_norm()
