"""
operators/growth.py
============================================================
무한대 근처 거동 검사: F = O(ln|z|), ∂z F(∞) = 0

설명:
- 곡선 bbox 중심을 중심으로 반지름 R 원 위 64 점에서 |F|, |∂z F| 를 잽니다.
- ratio = max|F| / ln R. 모든 반지름에서 growth_ratio_factor × (첫 반지름 값) 이하이면 bounded.
- G = α conj(∂z F) + β ∂z F 는 L F = 0 이면 γ 밖에서 holomorphic 이고, ∂z F(∞)=0 이면 0 으로 갑니다.
"""

from __future__ import annotations

import logging
from typing import Optional, Sequence

import numpy as np

from config import DEFAULT_TOLERANCES
from operators.jump_problem import JumpProblemSolution
from schemas.reports import GrowthReport

logger = logging.getLogger(__name__)

_N_ANGLES = 64
_RATIO_FLOOR = 1e-12


def asymptotic_growth_check(
    solution: JumpProblemSolution,
    radii: Sequence[float] = (10.0, 100.0, 1000.0),
    ratio_factor: Optional[float] = None,
    dz_tol: Optional[float] = None,
) -> GrowthReport:
    """
    Args:
        solution: JumpProblemSolution
        radii: 증가하는 반지름 (모두 곡선 밖, > 1)
        ratio_factor: bounded 판정 배수 (기본 DEFAULT_TOLERANCES["growth_ratio_factor"])
        dz_tol: 마지막 반지름에서 |∂z F| 상한 (기본 DEFAULT_TOLERANCES["growth_dz"])

    Returns:
        GrowthReport
    """
    radii = [float(r) for r in radii]
    if not radii or any(b <= a for a, b in zip(radii, radii[1:])):
        raise ValueError("radii must be a non-empty increasing sequence")
    if radii[0] <= 1.0:
        raise ValueError("radii must exceed 1 (ln R is the growth scale)")
    ratio_factor = DEFAULT_TOLERANCES["growth_ratio_factor"] if ratio_factor is None else ratio_factor
    dz_tol = DEFAULT_TOLERANCES["growth_dz"] if dz_tol is None else dz_tol

    curve = solution.curve
    xmin, ymin, xmax, ymax = curve.bbox
    center = complex(0.5 * (xmin + xmax), 0.5 * (ymin + ymax))
    reach = float(np.max(np.abs(curve.vertices - center)))
    if radii[0] <= reach:
        raise ValueError(f"smallest radius {radii[0]} does not enclose the curve (reach {reach:.4g})")

    circle = np.exp(2j * np.pi * np.arange(_N_ANGLES) / _N_ANGLES)
    a, b = solution.params.alpha, solution.params.beta
    ratios, dz_max, pot_max = [], [], []
    for r in radii:
        z = center + r * circle
        f = np.asarray(solution.field(z))
        dz = np.asarray(solution.dz_field(z))
        ratios.append(float(np.abs(f).max()) / np.log(r))
        dz_max.append(float(np.abs(dz).max()))
        pot_max.append(float(np.abs(a * np.conj(dz) + b * dz).max()))
        logger.debug("R=%g ratio=%.4e |dz|=%.4e", r, ratios[-1], dz_max[-1])

    bounded = all(q <= ratio_factor * ratios[0] + _RATIO_FLOOR for q in ratios)
    decaying = dz_max[-1] < dz_tol
    return GrowthReport(
        radii=radii, ratios=ratios, dz_max=dz_max, potential_max=pot_max, bounded=bounded, decaying=decaying
    )
