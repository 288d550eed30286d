#!/usr/bin/env python3
"""
CSV writers for experiment results

Every file is written through pandas with a fixed float format and "\\n" line
endings, so identical results give byte-identical files.
"""

import logging
from pathlib import Path
from typing import List, Sequence, Union

import pandas as pd

from config import settings
from spectra import EssentialSpectrumReport, report_rows
from .models import MoyalReport, PointNorm, PointSpectrum, RandomReport, SweepRow

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]

SPECTRUM_COLUMNS = ["point_id", "value"]
ESS_COLUMNS = ["value", "source"]
SWEEP_COLUMNS = ["hbar", "d_to_classical", "n_eigenvalues", "runtime_ms"]
SWEEP_DETAIL_COLUMNS = ["hbar", "resolvent_norm", "d_ess_to_classical"]
RANDOM_COLUMNS = ["sample_id", "max_pairwise_d", "n_isolated"]
MOYAL_COLUMNS = ["check", "parameter", "value"]
NORMS_COLUMNS = ["point_id", "norm"]


def _write(frame: pd.DataFrame, path: PathLike) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(path, index=False, float_format=settings.CSV_FLOAT_FORMAT, lineterminator="\n")
    logger.debug("wrote %s (%d rows)", path, len(frame))
    return path


def write_spectrum_csv(results: Sequence[PointSpectrum], path: PathLike) -> Path:
    rows = [{"point_id": r.point_id, "value": v} for r in results for v in r.spectrum]
    return _write(pd.DataFrame(rows, columns=SPECTRUM_COLUMNS), path)


def write_ess_csv(report: EssentialSpectrumReport, path: PathLike) -> Path:
    return _write(pd.DataFrame(report_rows(report), columns=ESS_COLUMNS), path)


def write_sweep_csv(rows: Sequence[SweepRow], path: PathLike) -> List[Path]:
    """sweep.csv, plus sweep_detail.csv next to it when any optional column is filled"""
    frame = pd.DataFrame(
        [
            {
                "hbar": r.hbar,
                "d_to_classical": r.d_to_classical,
                "n_eigenvalues": len(r.spectrum),
                "runtime_ms": r.runtime_ms,
            }
            for r in rows
        ],
        columns=SWEEP_COLUMNS,
    )
    written = [_write(frame, path)]
    if any(r.resolvent_norm is not None or r.d_ess_to_classical is not None for r in rows):
        detail = pd.DataFrame(
            [{"hbar": r.hbar, "resolvent_norm": r.resolvent_norm, "d_ess_to_classical": r.d_ess_to_classical}
             for r in rows],
            columns=SWEEP_DETAIL_COLUMNS,
        )
        written.append(_write(detail, Path(path).with_name("sweep_detail.csv")))
    return written


def write_random_csv(report: RandomReport, path: PathLike) -> Path:
    rows = [
        {"sample_id": s.sample_id, "max_pairwise_d": s.max_pairwise_d, "n_isolated": s.n_isolated}
        for s in report.samples
    ]
    return _write(pd.DataFrame(rows, columns=RANDOM_COLUMNS), path)


def write_moyal_csv(report: MoyalReport, path: PathLike) -> Path:
    rows = [{"check": "morphism_relative_error", "parameter": N, "value": e} for N, e in report.morphism_errors]
    rows += [{"check": "expansion_remainder", "parameter": h, "value": r} for h, r in report.remainders]
    return _write(pd.DataFrame(rows, columns=MOYAL_COLUMNS), path)


def write_norms_csv(profile: Sequence[PointNorm], path: PathLike) -> Path:
    return _write(pd.DataFrame([p.model_dump() for p in profile], columns=NORMS_COLUMNS), path)
