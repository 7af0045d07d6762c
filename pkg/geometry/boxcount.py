"""
geometry/boxcount.py
============================================================
Box counting 과 d-summability 진단

설명:
- N_γ(τ) 는 한 변 τ√2 인 격자 셀(반지름 τ 공 안에 들어감)로 곡선을 덮었을 때
  방문한 셀 수입니다. 최소 덮개 수의 상한 추정이며 상수배 이내로 정확합니다.
- 세그먼트를 셀 크기의 1/4 간격으로 샘플링해 방문 셀을 모읍니다.
- box_dimension 은 log N 대 log(1/τ) 의 최소제곱 기울기입니다.
- d_summability_integral 은 ∫_{τ_min}^1 N(τ) τ^{d−1} dτ 를
  log τ 기하 격자 위 사다리꼴 규칙으로 계산합니다.
"""

from __future__ import annotations

import logging
from typing import Optional, Sequence, Union

import numpy as np
from scipy.integrate import trapezoid

from geometry.curve import Curve

logger = logging.getLogger(__name__)

CurveLike = Union[Curve, np.ndarray]


def _polyline(curve: CurveLike, closed: bool) -> tuple[np.ndarray, np.ndarray]:
    if isinstance(curve, Curve):
        return curve.starts, curve.ends
    v = np.asarray(curve, dtype=complex).ravel()
    if closed:
        return v, np.roll(v, -1)
    return v[:-1], v[1:]


def _sample_polyline(a: np.ndarray, b: np.ndarray, spacing: float) -> np.ndarray:
    lengths = np.abs(b - a)
    counts = np.maximum(np.ceil(lengths / spacing).astype(np.int64), 1)
    seg = np.repeat(np.arange(a.size), counts)
    offsets = np.repeat(np.cumsum(counts) - counts, counts)
    t = (np.arange(seg.size) - offsets) / counts[seg]
    pts = a[seg] + t * (b[seg] - a[seg])
    # 마지막 끝점 (열린 곡선용; 닫힌 곡선에서는 중복)
    return np.concatenate([pts, b[-1:]])


def box_count(curve: CurveLike, tau: float, closed: bool = True) -> int:
    """
    N_γ(τ) 상한 추정.

    Args:
        curve: Curve 또는 꼭짓점 complex 배열
        tau: 공 반지름 (> 0)
        closed: 배열 입력일 때 닫힌 곡선으로 볼지 여부

    Returns:
        int: 방문한 τ√2 격자 셀 수
    """
    if not tau > 0:
        raise ValueError(f"tau must be positive (got {tau})")
    a, b = _polyline(curve, closed)
    cell = tau * np.sqrt(2.0)
    pts = _sample_polyline(a, b, cell / 4.0)

    x0 = min(a.real.min(), b.real.min())
    y0 = min(a.imag.min(), b.imag.min())
    ix = np.floor((pts.real - x0) / cell).astype(np.int64)
    iy = np.floor((pts.imag - y0) / cell).astype(np.int64)
    keys = ix * (int(iy.max()) + 1) + iy
    return int(np.unique(keys).size)


def default_taus(curve: CurveLike, n: int = 13) -> np.ndarray:
    """3⁻⁵ ~ 3⁻¹ 기하 격자 (곡선 지름 기준)"""
    if isinstance(curve, Curve):
        scale = curve.nominal_diameter
    else:
        v = np.asarray(curve, dtype=complex)
        scale = float(np.max(np.abs(v - v[0]))) or 1.0
    return scale * np.geomspace(3.0**-5, 3.0**-1, n)


def box_dimension(curve: CurveLike, taus: Optional[Sequence[float]] = None, closed: bool = True) -> float:
    """
    box-counting 차원 추정 (log N vs log(1/τ) 회귀 기울기)

    Note:
        - 원 같은 매끈한 곡선은 ~1, Koch snowflake 는 ~log4/log3 ≈ 1.26
    """
    taus = default_taus(curve) if taus is None else np.asarray(taus, dtype=float)
    counts = np.array([box_count(curve, t, closed=closed) for t in taus], dtype=float)
    slope, _ = np.polyfit(np.log(1.0 / taus), np.log(counts), 1)
    logger.debug("box dimension fit: taus=%s counts=%s slope=%.4f", taus, counts, slope)
    return float(slope)


def d_summability_integral(
    curve: CurveLike,
    d: float,
    tau_min: float,
    points_per_decade: int = 8,
    closed: bool = True,
) -> float:
    """
    ∫_{τ_min}^1 N_γ(τ) τ^{d−1} dτ

    Args:
        curve: Curve 또는 꼭짓점 배열
        d: 지수 (1 < d < 2)
        tau_min: 하한 (0 < τ_min < 1)

    Returns:
        float: 적분 값. 수렴 여부는 τ_min 을 줄여가며 증분이 줄어드는지로 판단합니다.

    Note:
        - dτ = τ d(log τ) 이므로 적분 변수는 log τ, 피적분 함수는 N(τ) τ^d 입니다.
    """
    if not (1.0 < d <= 2.0):
        raise ValueError(f"d must lie in (1, 2] (got {d})")
    if not (0.0 < tau_min < 1.0):
        raise ValueError(f"tau_min must lie in (0, 1) (got {tau_min})")

    decades = np.log10(1.0 / tau_min)
    n = max(int(np.ceil(decades * points_per_decade)) + 1, 3)
    taus = np.geomspace(tau_min, 1.0, n)
    counts = np.array([box_count(curve, t, closed=closed) for t in taus], dtype=float)
    return float(trapezoid(counts * taus**d, np.log(taus)))
