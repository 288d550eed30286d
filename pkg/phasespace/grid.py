#!/usr/bin/env python3
"""
Uniform grids on [-L, L) and their Planck-dependent dual grids
"""

from dataclasses import dataclass, field

import numpy as np

from config import settings
from .errors import GridError


def check_hbar(hbar: float) -> float:
    """Validate a Planck parameter, returning it as float"""
    hbar = float(hbar)
    if not (0.0 < hbar <= 1.0) or not np.isfinite(hbar):
        raise GridError(f"hbar must be in (0,1], got {hbar}")
    return hbar


@dataclass(frozen=True)
class Grid:
    """
    Configuration grid x_j = -L + j*spacing, j = 0..N-1

    The momentum nodes depend on hbar: xi_m = hbar*(-pi/spacing + 2*pi*m/(N*spacing)),
    i.e. N points on the Nyquist interval [-pi*hbar/spacing, pi*hbar/spacing).
    With that choice sum_m exp(i(x_j - x_k)xi_m/hbar) = N*delta_jk.
    """
    L: float
    N: int
    spacing: float = field(init=False)
    nodes: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "spacing", 2.0 * self.L / self.N)
        nodes = -self.L + np.arange(self.N) * self.spacing
        nodes.setflags(write=False)
        object.__setattr__(self, "nodes", nodes)

    def dual_spacing(self, hbar: float) -> float:
        return 2.0 * np.pi * hbar / (self.N * self.spacing)

    def dual_nodes(self, hbar: float) -> np.ndarray:
        hbar = check_hbar(hbar)
        return hbar * (-np.pi / self.spacing + 2.0 * np.pi * np.arange(self.N) / (self.N * self.spacing))

    def quadrature_nodes(self, hbar: float) -> np.ndarray:
        """
        2N momentum nodes at half the dual spacing, same Nyquist interval

        sum_m exp(i(x_j - x_k)xi_m/hbar) = 2N*delta_jk for |j - k| < N, so
        kernels on opposite box edges never alias onto each other.
        """
        hbar = check_hbar(hbar)
        return hbar * (-np.pi / self.spacing + np.pi * np.arange(2 * self.N) / (self.N * self.spacing))

    def midpoints(self) -> np.ndarray:
        """The 2N-1 midpoint lines (x_j + x_k)/2, indexed by s = j + k"""
        return -self.L + np.arange(2 * self.N - 1) * (self.spacing / 2.0)

    @property
    def resolution(self) -> float:
        """Default spectral resolution for spectra computed on this grid"""
        return settings.RESOLUTION_FACTOR * self.spacing

    def __str__(self) -> str:
        return f"Grid(L={self.L:g}, N={self.N})"


def make_grid(L: float, N: int) -> Grid:
    """
    Build a grid on [-L, L) with N nodes

    Args:
        L: Half-width, must be positive
        N: Number of nodes, a power of two and at least 8

    Returns:
        Grid instance

    Raises:
        GridError: If L is not positive or N is not an admissible power of two
    """
    try:
        L = float(L)
    except (TypeError, ValueError):
        raise GridError(f"L must be a real number, got {L!r}")
    if not np.isfinite(L) or L <= 0:
        raise GridError(f"L must be positive, got {L}")
    if isinstance(N, bool) or int(N) != N:
        raise GridError(f"N must be an integer, got {N!r}")
    N = int(N)
    if N < settings.MIN_GRID_POINTS:
        raise GridError(f"N must be at least {settings.MIN_GRID_POINTS}, got {N}")
    if N & (N - 1):
        raise GridError(f"N must be a power of two, got {N}")
    return Grid(L, N)
