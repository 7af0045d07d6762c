"""
geometry/generators.py
============================================================
표준 곡선 생성기 (원, Koch snowflake)

설명:
- make_circle: 정 n각형 근사 (반시계, 각도 2πk/n 에서 시작)
- make_koch_snowflake: 정삼각형에서 시작해 각 세그먼트를 4개로 나누고
  가운데 1/3 위에 바깥쪽 삼각형 돌기를 세웁니다. 세그먼트 수 = 3·4^g

Note:
- 생성된 곡선은 구성상 단순(simple)하므로 self-intersection 검사를 생략합니다.
"""

import logging

import numpy as np

from config import MAX_KOCH_GENERATION, MIN_CIRCLE_SEGMENTS
from errors import BadDiscretizationError, DepthTooLargeError
from geometry.curve import Curve

logger = logging.getLogger(__name__)

# 오른쪽(바깥쪽)으로 60° 회전
_OUTWARD_ROTATION = np.exp(-1j * np.pi / 3.0)


def make_circle(center: complex = 0.0, radius: float = 1.0, n_segments: int = 256) -> Curve:
    """
    원을 정 n각형으로 근사합니다.

    Args:
        center: 중심
        radius: 반지름 (> 0)
        n_segments: 세그먼트 수 (≥ 8)

    Returns:
        Curve: 최대 현 오차 ≤ radius·(1 − cos(π/n))
    """
    if n_segments < MIN_CIRCLE_SEGMENTS:
        raise BadDiscretizationError(f"circle needs at least {MIN_CIRCLE_SEGMENTS} segments (got {n_segments})")
    if not radius > 0:
        raise BadDiscretizationError(f"radius must be positive (got {radius})")
    angles = 2.0 * np.pi * np.arange(n_segments) / n_segments
    vertices = complex(center) + radius * np.exp(1j * angles)
    return Curve(vertices, label=f"circle(n={n_segments})")


def _koch_refine(vertices: np.ndarray) -> np.ndarray:
    p1 = vertices
    step = (np.roll(vertices, -1) - vertices) / 3.0
    s1 = p1 + step
    tip = s1 + step * _OUTWARD_ROTATION
    s2 = p1 + 2.0 * step
    return np.stack([p1, s1, tip, s2], axis=1).ravel()


def make_koch_snowflake(generation: int, scale: float = 1.0, center: complex = 0.0) -> Curve:
    """
    Koch snowflake polyline 을 만듭니다.

    Args:
        generation: 생성 깊이 (0 ≤ g ≤ MAX_KOCH_GENERATION)
        scale: 초기 정삼각형의 한 변 길이
        center: 초기 삼각형의 무게중심

    Returns:
        Curve: 3·4^g 세그먼트, 양의 방향
    """
    if generation < 0:
        raise BadDiscretizationError(f"generation must be non-negative (got {generation})")
    if generation > MAX_KOCH_GENERATION:
        raise DepthTooLargeError(f"Koch generation {generation} exceeds the limit {MAX_KOCH_GENERATION}")

    radius = scale / np.sqrt(3.0)
    angles = np.array([-0.5, 1.0 / 6.0, 5.0 / 6.0]) * np.pi
    vertices = complex(center) + radius * np.exp(1j * angles)
    for _ in range(generation):
        vertices = _koch_refine(vertices)
    logger.debug("koch snowflake generation=%d segments=%d", generation, vertices.size)
    return Curve(vertices, generation=generation, label=f"koch(g={generation})")
