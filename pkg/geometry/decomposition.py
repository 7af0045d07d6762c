"""
geometry/decomposition.py
============================================================
Whitney 분해 (dyadic quadtree) 와 d-sum

설명:
- 곡선의 bounding square(양쪽으로 1/16 여유)를 루트로 두고 레벨 단위로 4분할합니다.
- 레벨마다 후보 정사각형 Q 에 대해 dist(Q, γ) 를 shapely STRtree 로 정확히 계산하고
    수용 : dist(Q, γ) ≥ diam(Q) 이고 중심이 Ω 안
    폐기 : Q 가 γ 와 떨어져 있고 중심이 Ω 밖 (Q 전체가 Ω₋)
    분할 : 나머지 (dist < diam)
- 분할된 부모는 dist < diam(부모) 이므로 자식은 자동으로 dist ≤ 4·diam 을 만족합니다.
- max_depth 에서 남은 셀은 boundary_cells 로 보관합니다 (area rule 의 경계 보정용).

region="complement":
- γ 의 여집합 전체(루트 박스 안, Ω₊ 와 Ω₋ 양쪽)를 분해합니다. Whitney extension 에서 사용.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Literal, Optional, Sequence

import numpy as np
import shapely

from config import MAX_DECOMPOSITION_DEPTH
from errors import DepthTooLargeError
from geometry.curve import Curve

logger = logging.getLogger(__name__)

SQRT2 = np.sqrt(2.0)
_CHILD_OFFSETS = np.array([-1 - 1j, 1 - 1j, -1 + 1j, 1 + 1j]) * 0.25


@dataclass(frozen=True, eq=False)
class DomainDecomposition:
    curve: Curve
    centers: np.ndarray          # 수용된 정사각형 중심 (complex)
    sides: np.ndarray            # 한 변 길이
    depths: np.ndarray           # 분할 깊이 (루트 = 0)
    inside: np.ndarray           # 중심이 Ω 안인지
    boundary_centers: np.ndarray # max_depth 에서 남은 셀
    boundary_side: float
    max_depth: int
    root_center: complex
    root_side: float
    region: str = "interior"

    @property
    def n_squares(self) -> int:
        return int(self.centers.size)

    @property
    def diameters(self) -> np.ndarray:
        return self.sides * SQRT2

    @property
    def areas(self) -> np.ndarray:
        return self.sides**2

    @property
    def covered_area(self) -> float:
        return float(np.sum(self.areas[self.inside]))

    @property
    def uncovered_area(self) -> float:
        return self.curve.area - self.covered_area

    @cached_property
    def square_distances(self) -> np.ndarray:
        """정확한 dist(Q, γ)"""
        return self.curve.geometry_distance(_boxes(self.centers, self.sides))

    def whitney_ratios(self) -> np.ndarray:
        """dist(Q, γ) / diam(Q). Whitney 조건이면 [1, 4] 안에 있습니다."""
        return self.square_distances / self.diameters

    def level_counts(self, interior_only: bool = True) -> np.ndarray:
        mask = self.inside if interior_only else np.ones_like(self.inside)
        return np.bincount(self.depths[mask], minlength=self.max_depth + 1)

    def to_csv(self, path: str | Path) -> None:
        table = np.column_stack([self.centers.real, self.centers.imag, self.sides, self.depths])
        np.savetxt(Path(path), table, delimiter=",", header="cx,cy,side,depth", comments="",
                   fmt=["%.17g", "%.17g", "%.17g", "%d"])


def _boxes(centers: np.ndarray, sides) -> np.ndarray:
    half = 0.5 * np.asarray(sides, dtype=float)
    return shapely.box(centers.real - half, centers.imag - half, centers.real + half, centers.imag + half)


def _default_root(curve: Curve) -> tuple[complex, float]:
    xmin, ymin, xmax, ymax = curve.bbox
    side = max(xmax - xmin, ymax - ymin) * (1.0 + 2.0 / 16.0)
    return complex(0.5 * (xmin + xmax), 0.5 * (ymin + ymax)), side


def whitney_decompose(
    curve: Curve,
    max_depth: int,
    region: Literal["interior", "complement"] = "interior",
    root: Optional[tuple[complex, float]] = None,
) -> DomainDecomposition:
    """
    Whitney 분해를 계산합니다.

    Args:
        curve: 경계 곡선
        max_depth: 최대 분할 깊이 (≤ MAX_DECOMPOSITION_DEPTH)
        region: "interior" (Ω 만) 또는 "complement" (루트 박스 안의 γ 여집합 전체)
        root: (중심, 한 변) 루트 정사각형. None 이면 곡선 bounding square

    Returns:
        DomainDecomposition
    """
    if max_depth > MAX_DECOMPOSITION_DEPTH:
        raise DepthTooLargeError(f"max_depth {max_depth} exceeds the limit {MAX_DECOMPOSITION_DEPTH}")
    if max_depth < 0:
        raise ValueError("max_depth must be non-negative")

    root_center, root_side = root if root is not None else _default_root(curve)
    centers = np.array([complex(root_center)])
    side = float(root_side)

    acc_c, acc_s, acc_d, acc_in = [], [], [], []
    leftover = np.empty(0, dtype=complex)

    for depth in range(max_depth + 1):
        if centers.size == 0:
            break
        dist = curve.geometry_distance(_boxes(centers, side))
        diam = side * SQRT2
        inside = curve.inside_mask(centers)
        far = dist >= diam

        if region == "interior":
            accept = far & inside
            discard = (dist > 0.0) & ~inside
        else:
            accept = far
            discard = np.zeros_like(far)
        refine = ~accept & ~discard

        acc_c.append(centers[accept])
        acc_s.append(np.full(int(accept.sum()), side))
        acc_d.append(np.full(int(accept.sum()), depth, dtype=np.int64))
        acc_in.append(inside[accept])
        logger.debug("whitney depth=%d candidates=%d accepted=%d refine=%d",
                     depth, centers.size, int(accept.sum()), int(refine.sum()))

        if depth == max_depth:
            leftover = centers[refine]
            break
        centers = (centers[refine][:, None] + side * _CHILD_OFFSETS[None, :]).ravel()
        side *= 0.5

    decomp = DomainDecomposition(
        curve=curve,
        centers=np.concatenate(acc_c) if acc_c else np.empty(0, dtype=complex),
        sides=np.concatenate(acc_s) if acc_s else np.empty(0),
        depths=np.concatenate(acc_d) if acc_d else np.empty(0, dtype=np.int64),
        inside=np.concatenate(acc_in) if acc_in else np.empty(0, dtype=bool),
        boundary_centers=leftover,
        boundary_side=float(root_side) / 2.0**max_depth,
        max_depth=int(max_depth),
        root_center=complex(root_center),
        root_side=float(root_side),
        region=region,
    )
    logger.info("whitney decomposition: %s depth=%d squares=%d boundary_cells=%d",
                curve.label, max_depth, decomp.n_squares, leftover.size)
    return decomp


# ============================================================
# d-sum
# ============================================================
def _check_d(d: float) -> None:
    if not (1.0 < d <= 2.0):
        raise ValueError(f"d must lie in (1, 2] (got {d})")


def d_sum(decomp: DomainDecomposition, d: float) -> float:
    """Σ_{Q⊂Ω} |Q|^d (|Q| = 지름)"""
    _check_d(d)
    return float(np.sum(decomp.diameters[decomp.inside] ** d))


def d_sum_levels(decomp: DomainDecomposition, d: float) -> np.ndarray:
    """깊이별 d-sum 증분 (길이 max_depth+1)"""
    _check_d(d)
    mask = decomp.inside
    return np.bincount(decomp.depths[mask], weights=decomp.diameters[mask] ** d,
                       minlength=decomp.max_depth + 1)


def level_growth_exponent(decomp: DomainDecomposition, levels: Optional[Sequence[int]] = None) -> float:
    """
    레벨별 수용 정사각형 개수 #W_k ~ 2^{D_w k} 의 지수 D_w.

    Note:
        - d-sum 증분의 레벨 간 비율은 2^{D_w − d} 이므로 D_w < d 이면 d-sum 이 수렴합니다.
        - levels 를 주지 않으면 개수가 0이 아닌 레벨 중 뒤쪽 절반을 씁니다.
    """
    counts = decomp.level_counts()
    if levels is None:
        nonzero = np.flatnonzero(counts)
        levels = nonzero[len(nonzero) // 2:]
    levels = np.asarray(levels, dtype=int)
    levels = levels[counts[levels] > 0]
    if levels.size < 2:
        raise ValueError("need at least two populated levels to fit a growth exponent")
    slope, _ = np.polyfit(levels.astype(float), np.log2(counts[levels]), 1)
    return float(slope)
