"""
operators/boundary.py
============================================================
한쪽 경계 극한 F^±(t) 와 도약(jump)

설명:
- 프로브는 세그먼트 중점 t 에 두고, 법선은 세그먼트 내향 법선 n̂ = i·(단위 접선) 입니다.
  plus 는 t + δ n̂ (Ω₊ 쪽), minus 는 t − δ n̂ (Ω₋ 쪽).
- δ ∈ {δ₀, δ₀/2, δ₀/4} 세 값으로 Richardson 외삽:
    R1a = 2F(δ₀/2) − F(δ₀),  R1b = 2F(δ₀/4) − F(δ₀/2),  R2 = (4 R1b − R1a)/3
- |R1b − R1a| > 10·tol·(1 + |R2|) 이면 NonConvergent (특이한 접근).
- δ₀ 기본값은 BOUNDARY_DELTA_FACTOR × (세그먼트 길이). contour guard (3 × 최대 길이) 를
  가장 작은 오프셋에서도 지킵니다.
"""

from __future__ import annotations

import logging
from typing import Callable, Literal, Optional, Union

import numpy as np

from config import BOUNDARY_DELTA_FACTOR, BOUNDARY_LIMIT_TOL, CONTOUR_FD_STEP
from elasticity.operator import first_wirtinger_fd
from elasticity.params import LameParams
from errors import NonConvergentError
from geometry.curve import Curve
from operators.lame_cauchy import lame_cauchy_transform, lame_cauchy_transform_dz
from whitney.jet import WhitneyJet

logger = logging.getLogger(__name__)

Side = Literal["plus", "minus"]
Segments = Union[int, np.ndarray, list, None]


def probe_segments(curve: Curve, n_probes: int) -> np.ndarray:
    """곡선을 따라 고르게 펼친 n_probes 개 세그먼트 인덱스"""
    n = curve.n_segments
    n_probes = max(1, min(int(n_probes), n))
    return np.unique((np.arange(n_probes) * n) // n_probes)


def _segment_index(curve: Curve, segments: Segments) -> np.ndarray:
    if segments is None:
        return np.arange(curve.n_segments)
    idx = np.atleast_1d(np.asarray(segments, dtype=int))
    if np.any(idx < 0) or np.any(idx >= curve.n_segments):
        raise IndexError(f"segment index out of range [0, {curve.n_segments})")
    return idx


def boundary_limit(
    field: Callable,
    curve: Curve,
    segments: Segments,
    side: Side,
    delta0: Optional[np.ndarray | float] = None,
    delta_factor: float = BOUNDARY_DELTA_FACTOR,
    tol: float = BOUNDARY_LIMIT_TOL,
) -> np.ndarray:
    """
    세그먼트 중점에서의 한쪽 극한.

    Args:
        field: z 배열 → complex 배열
        segments: 세그먼트 인덱스 (정수, 배열, None=전체)
        side: "plus" (Ω₊) 또는 "minus" (Ω₋)
        delta0: 첫 오프셋 (None 이면 delta_factor × 세그먼트 길이)
        tol: 수렴 판정 허용오차

    Returns:
        np.ndarray: 세그먼트별 외삽값

    Raises:
        NonConvergentError: 1차 Richardson 값 두 개가 10·tol 이상 차이날 때
    """
    if side not in ("plus", "minus"):
        raise ValueError(f"side must be 'plus' or 'minus' (got {side!r})")
    idx = _segment_index(curve, segments)
    t = curve.midpoints[idx]
    n_hat = curve.inward_normals[idx]
    if side == "minus":
        n_hat = -n_hat
    d0 = delta_factor * curve.lengths[idx] if delta0 is None else np.broadcast_to(np.asarray(delta0, float), t.shape)

    f1, f2, f4 = (np.asarray(field(t + (d0 / k) * n_hat), dtype=complex) for k in (1.0, 2.0, 4.0))
    r1a = 2.0 * f2 - f1
    r1b = 2.0 * f4 - f2
    r2 = (4.0 * r1b - r1a) / 3.0

    spread = np.abs(r1b - r1a)
    bad = spread > 10.0 * tol * (1.0 + np.abs(r2))
    if np.any(bad):
        k = int(np.argmax(spread))
        raise NonConvergentError(
            f"{side}-limit did not settle at segment {int(idx[k])}: "
            f"|R1b - R1a| = {spread[k]:.3e} (t = {t[k]:.6g})"
        )
    logger.debug("%s-limit at %d segments, max spread %.3e", side, idx.size, float(spread.max(initial=0.0)))
    return r2


def boundary_jump(field: Callable, curve: Curve, segments: Segments = None, **kwargs) -> np.ndarray:
    """F⁺(t) − F⁻(t)"""
    return boundary_limit(field, curve, segments, "plus", **kwargs) - boundary_limit(
        field, curve, segments, "minus", **kwargs
    )


def derivative_jump(
    params: LameParams,
    jet: WhitneyJet,
    segments: Segments = None,
    method: Literal["analytic", "fd"] = "analytic",
    h: float = CONTOUR_FD_STEP,
    **kwargs,
) -> np.ndarray:
    """
    [∂z C^L f]⁺ − [∂z C^L f]⁻ (세그먼트 중점). 기대값은 f1(t).

    Args:
        method: "analytic" 은 lame_cauchy_transform_dz, "fd" 는 C^L 의 중앙차분
        h: fd 스텝
    """
    idx = _segment_index(curve=jet.curve, segments=segments)
    if jet.is_zero():
        return np.zeros(idx.size, dtype=complex)
    if method == "analytic":
        field = lambda w: lame_cauchy_transform_dz(params, jet, w)  # noqa: E731
    elif method == "fd":
        field = lambda w: first_wirtinger_fd(lambda u: lame_cauchy_transform(params, jet, u), w, h)[0]  # noqa: E731
    else:
        raise ValueError(f"unknown derivative method: {method}")
    return boundary_jump(field, jet.curve, idx, **kwargs)


def midpoint_values(values: np.ndarray, segments: Segments, curve: Curve) -> np.ndarray:
    """꼭짓점 값을 세그먼트 중점으로 선형 보간 (jump 기대값 비교용)"""
    idx = _segment_index(curve, segments)
    v = np.broadcast_to(np.asarray(values, dtype=complex), (curve.n_segments,))
    return 0.5 * (v[idx] + v[(idx + 1) % curve.n_segments])
