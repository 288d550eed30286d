#!/usr/bin/env python3
"""
Default settings for orbitspec runs.

Nothing here is read from the environment: a run is fully determined by its
scenario file, its overrides and --seed.
"""

# Randomness
DEFAULT_SEED = 7

# Grids
MIN_GRID_POINTS = 8
DIRECT_MAX_N = 128  # cost guard for the brute-force quantization oracle

# Spectral resolution: eps = RESOLUTION_FACTOR * (2L / N)
RESOLUTION_FACTOR = 4
EDGE_MARGIN_RESOLUTIONS = 2
DEFAULT_ISOLATION_GAP = 0.1
MAX_ISOLATED_MULTIPLICITY = 4
DEGENERACY_TOLERANCE = 1e-9

# Truncation ladders: each rung scales (L, N) by these factors; equal factors keep the spacing
LADDER_L_FACTOR = 2
LADDER_N_FACTOR = 2

# Solver contract
EIGEN_RESIDUAL_TOL = 1e-8

# Dynamics
DEFAULT_BOUNDARY_SAMPLES = 64
DEFAULT_QUADRATURE_POINTS = 401
DEFAULT_SHELL_RATIO = 1000.0

# Deformed product: Op(f#g) = Op(f)Op(g) is checked at this hbar, on N and 2N
MORPHISM_HBAR = 1.0
CLASSICAL_RANGE_BOX = 40.0
CLASSICAL_RANGE_SAMPLES = 401
CLASSICAL_RANGE_RESOLUTION = 1e-3

# Outputs
DEFAULT_OUT_DIR = "out"
CSV_FLOAT_FORMAT = "%.12g"
