#!/usr/bin/env python3
"""
Weyl quantization on a grid, the deformed product and the Poisson bracket
"""

from .quantization import (
    OperatorMatrix,
    build_op_matrix,
    build_op_matrix_direct,
    op_from_samples,
    half_node_shift,
    commutator_defect,
    dump_matrix_csv,
)
from .moyal import (
    SampledSymbol,
    sample_symbol,
    moyal_product,
    poisson_bracket,
    expansion_remainder,
)
from .resolvent import resolvent_norm

__all__ = [
    "OperatorMatrix",
    "build_op_matrix",
    "build_op_matrix_direct",
    "op_from_samples",
    "half_node_shift",
    "commutator_defect",
    "dump_matrix_csv",
    "SampledSymbol",
    "sample_symbol",
    "moyal_product",
    "poisson_bracket",
    "expansion_remainder",
    "resolvent_norm",
]
