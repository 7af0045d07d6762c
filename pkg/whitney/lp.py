"""
whitney/lp.py
============================================================
확장의 2계 도함수에 대한 L^p 추정

설명:
- p = (2 − d)/(1 − ν). ν > d/2 이면 p > 2 이고 fractal 해의 L^p 인증이 성립합니다.
- lp_norm_estimate 는 Whitney 정사각형마다 3×3 샘플의 sup|∂²f̃| 를 잡아
  Σ_Q (sup_Q |∂²f̃|)^p · area(Q) 를 계산합니다 (∫|∂²f̃|^p 의 이산 상한).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from geometry.decomposition import DomainDecomposition
from whitney.extension import Extension

logger = logging.getLogger(__name__)

_SAMPLE_OFFSETS = np.array([-0.5, 0.0, 0.5])


def lp_exponent(d: float, nu: float) -> float:
    if not (1.0 < d < 2.0):
        raise ValueError(f"d must lie in (1, 2) (got {d})")
    if not (0.0 < nu < 1.0):
        raise ValueError(f"nu must lie in (0, 1) (got {nu})")
    return (2.0 - d) / (1.0 - nu)


def certificate_available(d: float, nu: float) -> bool:
    """ν > d/2 ⟺ p > 2"""
    return nu > d / 2.0


@dataclass(frozen=True)
class LpEstimate:
    total: float
    per_square: np.ndarray
    p: float
    depths: np.ndarray

    def level_increments(self) -> tuple[np.ndarray, np.ndarray]:
        """(깊이, 그 깊이 정사각형들의 합). 깊이를 하나 올릴 때 합에 더해지는 양"""
        levels = np.unique(self.depths)
        sums = np.array([self.per_square[self.depths == k].sum() for k in levels])
        return levels, sums


def lp_norm_estimate(ext: Extension, decomp: DomainDecomposition, p: float) -> LpEstimate:
    """
    Σ_Q (sup_Q max|∂²f̃|)^p · area(Q)  (Ω 안의 Whitney 정사각형)

    Args:
        ext: Whitney 확장
        decomp: 같은 곡선의 interior Whitney 분해
        p: 지수 (> 0)
    """
    if decomp.curve is not ext.jet.curve and not np.array_equal(decomp.curve.vertices, ext.jet.curve.vertices):
        raise ValueError("extension and decomposition must share the same curve")
    mask = decomp.inside
    centers, sides = decomp.centers[mask], decomp.sides[mask]
    offsets = (_SAMPLE_OFFSETS[:, None] + 1j * _SAMPLE_OFFSETS[None, :]).ravel()
    samples = centers[:, None] + sides[:, None] * offsets[None, :]

    zz, zb, bb = ext.second_derivatives(samples.ravel())
    mag = np.maximum.reduce([np.abs(zz), np.abs(zb), np.abs(bb)]).reshape(samples.shape)
    sup = mag.max(axis=1)
    per_square = sup**p * sides**2
    total = float(per_square.sum())
    logger.debug("lp estimate: p=%.3f squares=%d depth=%d total=%.6g sup_max=%.3e",
                 p, sides.size, decomp.max_depth, total, float(sup.max()) if sup.size else 0.0)
    return LpEstimate(total=total, per_square=per_square, p=float(p), depths=decomp.depths[mask])
