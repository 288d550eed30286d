#!/usr/bin/env python3
"""
Acceptance checks run under --check

Each function returns a list of failure messages; an empty list passes.
All numbers come from config.acceptance.
"""

from typing import List, Optional, Sequence

import numpy as np

from config import threshold
from phasespace import SpectralSet
from spectra import EssentialSpectrumReport, hausdorff
from .models import MoyalReport, PointNorm, PointSpectrum, RandomReport, SweepRow


def check_spectrum(results: Sequence[PointSpectrum]) -> List[str]:
    limit = threshold("hermitian_defect")
    return [
        f"spectrum {r.point_id}: hermitian defect {r.hermitian_defect:.3e} > {limit:g}"
        for r in results
        if r.hermitian_defect > limit
    ]


def check_sweep(rows: Sequence[SweepRow]) -> List[str]:
    """Final distance to the classical range, and no jump up between consecutive rows"""
    failures = []
    final_limit = threshold("sweep_final_distance")
    step_limit = threshold("sweep_max_increase")
    final = rows[-1]
    if final.d_to_classical > final_limit:
        failures.append(
            f"sweep: d_to_classical={final.d_to_classical:.4f} at hbar={final.hbar:g} exceeds {final_limit:g}"
        )
    for previous, row in zip(rows, rows[1:]):
        increase = row.d_to_classical - previous.d_to_classical
        if increase > step_limit:
            failures.append(
                f"sweep: d_to_classical rose by {increase:.4f} from hbar={previous.hbar:g} to {row.hbar:g}"
            )
    return failures


def check_random(report: RandomReport) -> List[str]:
    failures = []
    limit = threshold("pairwise_hausdorff")
    if report.max_pairwise_d > limit:
        failures.append(f"random: max pairwise distance {report.max_pairwise_d:.4f} exceeds {limit:g}")
    for sample in report.samples:
        if sample.isolated:
            values = ", ".join(f"{v:.6g}" for v in sample.isolated)
            failures.append(f"random: isolated eigenvalues at {sample.point}: {values}")
    return failures


def check_ess(report: EssentialSpectrumReport, reference: Optional[SpectralSet] = None) -> List[str]:
    """
    A one-point prediction {c} is checked by counting: the number of
    eigenvalues farther than the neighbourhood size from c may drift by at
    most the allowed count between the last two rungs. Any other prediction
    must lie within the Hausdorff threshold of the numerical estimate.

    A closed-form reference, when given, is held to the same Hausdorff
    threshold against the numerical estimate.
    """
    failures = []
    limit = threshold("essential_hausdorff")
    if reference is not None:
        distance = hausdorff(reference, report.numerical) if not report.numerical.empty else float("inf")
        if distance > limit:
            failures.append(f"ess: hausdorff(closed form, numerical)={distance:.4f} exceeds {limit:g}")

    predicted = report.predicted.with_resolution(threshold("asymptotic_neighbourhood")).merged()
    if len(predicted) == 1 and report.rung_spectra:
        c = predicted.values[0]
        radius = threshold("asymptotic_neighbourhood")
        counts = [int(np.sum(np.abs(s.values - c) > radius)) for s in report.rung_spectra]
        drift = abs(counts[-1] - counts[-2])
        if drift > threshold("asymptotic_count_drift"):
            failures.append(f"ess: eigenvalues away from {c:g} changed from {counts[-2]} to {counts[-1]} across rungs")
        return failures
    if report.hausdorff_distance > limit:
        failures.append(f"ess: hausdorff(predicted, numerical)={report.hausdorff_distance:.4f} exceeds {limit:g}")
    return failures


def check_norm_profile(profile: Sequence[PointNorm]) -> List[str]:
    """The first base point carries the generic orbit: its norm is the largest, up to the tolerance"""
    limit = threshold("norm_identity")
    top = max(p.norm for p in profile)
    first = profile[0]
    if first.norm < (1.0 - limit) * top:
        return [
            f"norms: ||H|| at {first.point_id} is {first.norm:.6g}, "
            f"below the maximum {top:.6g} by more than {limit:g}"
        ]
    return []


def check_moyal(report: MoyalReport) -> List[str]:
    failures = []
    limit = threshold("morphism_relative_error")
    floor = threshold("morphism_floor")
    (n0, e0), (n1, e1) = report.morphism_errors[0], report.morphism_errors[-1]
    if e0 > limit:
        failures.append(f"moyal: morphism error {e0:.3e} at N={n0} exceeds {limit:g}")
    if e0 > floor and not e1 < e0:
        failures.append(f"moyal: morphism error did not decrease from N={n0} ({e0:.3e}) to N={n1} ({e1:.3e})")
    ratio_limit = threshold("expansion_halving_ratio")
    for ratio in report.halving_ratios:
        if ratio < ratio_limit:
            failures.append(f"moyal: remainder shrank by {ratio:.2f} < {ratio_limit:g} when hbar halved")
    return failures
