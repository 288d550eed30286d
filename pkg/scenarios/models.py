#!/usr/bin/env python3
"""
Pydantic models for scenarios and experiment reports
"""

from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from config import settings
from phasespace import SpectralSet


class Experiment(str, Enum):
    """Experiments a scenario can request"""
    SPECTRUM = "spectrum"
    ESS = "ess-spectrum"
    SWEEP = "sweep"
    RANDOM = "random"
    MOYAL = "moyal-check"
    NORMS = "norm-profile"


class Scenario(BaseModel):
    """
    A fully specified run: action, symbol, base points, grid and hbar schedule
    """
    model_config = ConfigDict(frozen=True)

    name: str = Field(..., min_length=1, description="Scenario name, also the output subdirectory")
    action: str = Field(..., description="Catalog action id, e.g. 'torus-ap'")
    action_params: Dict[str, Any] = Field(default_factory=dict, description="Action parameters (frequency)")

    symbol_name: Optional[str] = Field(None, description="Named catalog symbol")
    expression: Optional[str] = Field(None, description="Symbol expression text in x, xi")
    partner: Optional[str] = Field(None, description="Second expression for the deformed-product check")
    symbol_bound: Optional[float] = Field(None, gt=0, description="Declared bound on |f|")
    smooth: bool = Field(True, description="Whether the symbol is declared smooth")

    base_points: List[str] = Field(default_factory=list, description="Base points in point syntax")
    L: float = Field(..., gt=0, description="Half-width of the configuration box")
    N: int = Field(..., ge=settings.MIN_GRID_POINTS, description="Grid points, a power of two")
    ladder: Optional[List[Tuple[float, int]]] = Field(None, description="Truncation ladder rungs (L, N)")

    hbar_schedule: List[float] = Field(default_factory=lambda: [1.0], description="Planck parameters")
    experiments: List[Experiment] = Field(default_factory=lambda: [Experiment.SPECTRUM])
    seed: int = Field(settings.DEFAULT_SEED, description="Run seed; the only source of randomness")
    output_path: Optional[str] = Field(None, description="Output subdirectory, defaults to the name")

    count: int = Field(5, description="Base points drawn by the random experiment")
    zeta: Optional[Tuple[float, float]] = Field(None, description="Resolvent parameter (re, im)")
    gap: float = Field(settings.DEFAULT_ISOLATION_GAP, gt=0, description="Isolation gap")
    resolution: Optional[float] = Field(None, gt=0, description="Spectral resolution override")
    boundary_samples: int = Field(settings.DEFAULT_BOUNDARY_SAMPLES, ge=1)
    quadrature_points: int = Field(settings.DEFAULT_QUADRATURE_POINTS, ge=3)

    @field_validator("hbar_schedule")
    @classmethod
    def _check_hbar(cls, values: List[float]) -> List[float]:
        if not values:
            raise ValueError("hbar schedule must not be empty")
        for hbar in values:
            if not 0.0 < hbar <= 1.0:
                raise ValueError(f"hbar must be in (0,1], got {hbar:g}")
        return values

    @field_validator("N")
    @classmethod
    def _check_power_of_two(cls, N: int) -> int:
        if N & (N - 1):
            raise ValueError(f"N must be a power of two, got {N}")
        return N

    @field_validator("ladder")
    @classmethod
    def _check_ladder(cls, ladder):
        if ladder is not None and len(ladder) < 2:
            raise ValueError("ladder needs at least 2 rungs")
        return ladder

    @model_validator(mode="after")
    def _check_symbol(self) -> "Scenario":
        if (self.symbol_name is None) == (self.expression is None):
            raise ValueError("give exactly one of symbol.name and symbol.expr")
        return self

    @property
    def working_hbar(self) -> float:
        """hbar used by single-hbar experiments: the finest in the schedule"""
        return min(self.hbar_schedule)

    @property
    def output_dir(self) -> str:
        return self.output_path or self.name

    @property
    def zeta_value(self) -> Optional[complex]:
        return None if self.zeta is None else complex(*self.zeta)


class CatalogEntry(BaseModel):
    """A builtin scenario with its expected result"""
    scenario: Scenario
    expected: str = Field(..., description="Expected-result summary")
    tag: str = Field(..., description="Example the scenario reproduces")


class SweepRow(BaseModel):
    """One hbar of a semiclassical sweep"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    hbar: float
    spectrum: SpectralSet
    d_to_classical: float
    runtime_ms: int = 0
    resolvent_norm: Optional[float] = None
    d_ess_to_classical: Optional[float] = None


class RandomSample(BaseModel):
    """One base point of the random experiment"""
    sample_id: int
    point: str
    max_pairwise_d: float
    isolated: List[float] = Field(default_factory=list)

    @property
    def n_isolated(self) -> int:
        return len(self.isolated)


class RandomReport(BaseModel):
    """Equi-spectrality over seeded random base points"""
    seed: int
    hbar: float
    samples: List[RandomSample]

    @property
    def max_pairwise_d(self) -> float:
        return max(s.max_pairwise_d for s in self.samples)


class MoyalReport(BaseModel):
    """Deformed-product checks"""
    morphism_hbar: float
    morphism_errors: List[Tuple[int, float]] = Field(..., description="(N, relative error) pairs")
    remainders: List[Tuple[float, float]] = Field(..., description="(hbar, sup remainder) pairs")

    @property
    def halving_ratios(self) -> List[float]:
        ratios = []
        for (h0, r0), (h1, r1) in zip(self.remainders, self.remainders[1:]):
            if abs(h1 - h0 / 2.0) <= 1e-12 * h0 and r1 > 0:
                ratios.append(r0 / r1)
        return ratios


class PointSpectrum(BaseModel):
    """Spectrum of H_sigma at one base point"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    point_id: str
    spectrum: SpectralSet
    hermitian_defect: float


class PointNorm(BaseModel):
    """Operator norm of H_sigma at one base point"""
    point_id: str
    norm: float
