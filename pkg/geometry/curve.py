"""
geometry/curve.py
============================================================
닫힌 Jordan polyline (Curve) 과 점 포함 판정

설명:
- vertices 는 complex numpy 배열이며 마지막 꼭짓점은 첫 꼭짓점과 암묵적으로 연결됩니다.
- 방향은 항상 양의 방향(반시계, signed area > 0) 입니다.
  사용자 입력은 from_points()에서 필요하면 뒤집어서 맞춥니다.
- 거리/포함 판정은 shapely 로 합니다.
    distance : 세그먼트 STRtree 최근접 질의 (정확한 점-세그먼트 거리)
    contains : shapely.contains_xy (벡터화 point-in-polygon)

특징:
- Curve 는 불변 객체이고, 파생 값(세그먼트 길이, shapely 객체 등)은
  처음 접근할 때 한 번만 계산됩니다.
- CSV 형식: 헤더 `x,y`, 한 줄에 꼭짓점 하나, 닫힘은 암묵적
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from pathlib import Path
from typing import Optional

import numpy as np
import shapely

from config import BOUNDARY_TOLERANCE_RELATIVE, SIMPLICITY_CHECK_MAX_SEGMENTS
from errors import BadDiscretizationError

logger = logging.getLogger(__name__)


class Location(str, Enum):
    INSIDE = "inside"
    OUTSIDE = "outside"
    BOUNDARY = "boundary"


# locate() 가 돌려주는 정수 코드
INSIDE, BOUNDARY, OUTSIDE = 1, 0, -1
_CODE_TO_LOCATION = {INSIDE: Location.INSIDE, BOUNDARY: Location.BOUNDARY, OUTSIDE: Location.OUTSIDE}


def _as_xy(z: np.ndarray) -> np.ndarray:
    return np.column_stack([z.real.ravel(), z.imag.ravel()])


@dataclass(frozen=True, eq=False)
class Curve:
    vertices: np.ndarray
    generation: Optional[int] = None
    label: str = field(default="polyline")

    def __post_init__(self):
        v = np.ascontiguousarray(np.asarray(self.vertices, dtype=complex).ravel())
        if v.size < 3:
            raise BadDiscretizationError(f"a closed curve needs at least 3 vertices (got {v.size})")
        if not np.all(np.isfinite(v)):
            raise BadDiscretizationError("curve vertices must be finite")
        object.__setattr__(self, "vertices", v)
        if np.any(self.lengths <= 0.0):
            raise BadDiscretizationError("curve has repeated consecutive vertices (zero-length segment)")
        if self.signed_area <= 0.0:
            raise BadDiscretizationError(
                f"curve must be positively oriented (signed area={self.signed_area:.3e}); use Curve.from_points"
            )

    # ============================================================
    # 생성 / 입출력
    # ============================================================
    @classmethod
    def from_points(cls, points, label: str = "polyline", check_simple: bool = True) -> "Curve":
        """
        사용자 polyline 에서 Curve 를 만듭니다.

        Args:
            points: complex 배열 또는 (N, 2) 실수 배열
            check_simple: self-intersection 검사 여부

        Note:
            - 시계 방향이면 뒤집습니다.
            - 마지막 점이 첫 점과 같으면 중복을 제거합니다.
        """
        arr = np.asarray(points)
        if arr.ndim == 2 and arr.shape[1] == 2 and not np.iscomplexobj(arr):
            z = arr[:, 0] + 1j * arr[:, 1]
        else:
            z = arr.astype(complex).ravel()
        if z.size > 1 and z[0] == z[-1]:
            z = z[:-1]
        if z.size >= 3 and _shoelace(z) < 0:
            z = z[::-1].copy()

        curve = cls(z, label=label)
        if check_simple:
            ok, reason = curve.check_simple()
            if not ok:
                raise BadDiscretizationError(reason)
        return curve

    @classmethod
    def from_csv(cls, path: str | Path, check_simple: bool = True) -> "Curve":
        path = Path(path)
        with path.open("r", encoding="utf-8") as fh:
            header = fh.readline().strip().replace(" ", "").lower()
        if header != "x,y":
            raise BadDiscretizationError(f"{path}: expected CSV header 'x,y' (got '{header}')")
        data = np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)
        if data.shape[1] != 2:
            raise BadDiscretizationError(f"{path}: expected two columns")
        return cls.from_points(data, label=path.stem, check_simple=check_simple)

    def to_csv(self, path: str | Path) -> None:
        xy = _as_xy(self.vertices)
        np.savetxt(Path(path), xy, delimiter=",", header="x,y", comments="", fmt="%.17g")

    def scaled(self, factor: float, center: Optional[complex] = None) -> "Curve":
        """center(기본: 꼭짓점 평균) 기준 닮음 변환"""
        if not factor > 0:
            raise ValueError("scale factor must be positive")
        c = self.vertices.mean() if center is None else complex(center)
        return Curve(c + factor * (self.vertices - c), generation=self.generation, label=self.label)

    # ============================================================
    # 세그먼트 정보
    # ============================================================
    @property
    def n_segments(self) -> int:
        return int(self.vertices.size)

    @property
    def starts(self) -> np.ndarray:
        return self.vertices

    @cached_property
    def ends(self) -> np.ndarray:
        return np.roll(self.vertices, -1)

    @cached_property
    def edges(self) -> np.ndarray:
        return self.ends - self.starts

    @cached_property
    def lengths(self) -> np.ndarray:
        return np.abs(np.roll(self.vertices, -1) - self.vertices)

    @cached_property
    def midpoints(self) -> np.ndarray:
        return 0.5 * (self.starts + self.ends)

    @cached_property
    def tangents(self) -> np.ndarray:
        return self.edges / self.lengths

    @cached_property
    def inward_normals(self) -> np.ndarray:
        # 양의 방향이므로 내부는 진행 방향의 왼쪽
        return 1j * self.tangents

    @property
    def max_segment_length(self) -> float:
        return float(self.lengths.max())

    @property
    def perimeter(self) -> float:
        return float(self.lengths.sum())

    @cached_property
    def signed_area(self) -> float:
        return _shoelace(self.vertices)

    @property
    def area(self) -> float:
        return abs(self.signed_area)

    @cached_property
    def centroid(self) -> complex:
        z, w = self.starts, self.ends
        cross = (z.real * w.imag - w.real * z.imag)
        cx = np.sum((z.real + w.real) * cross) / (6.0 * self.signed_area)
        cy = np.sum((z.imag + w.imag) * cross) / (6.0 * self.signed_area)
        return complex(cx, cy)

    @cached_property
    def bbox(self) -> tuple[float, float, float, float]:
        v = self.vertices
        return float(v.real.min()), float(v.imag.min()), float(v.real.max()), float(v.imag.max())

    @cached_property
    def nominal_diameter(self) -> float:
        """꼭짓점 집합의 지름 (convex hull 꼭짓점 사이 최대 거리)"""
        hull = self.polygon.convex_hull
        coords = np.asarray(hull.exterior.coords)[:-1]
        h = coords[:, 0] + 1j * coords[:, 1]
        return float(np.max(np.abs(h[:, None] - h[None, :])))

    # ============================================================
    # shapely 객체
    # ============================================================
    @cached_property
    def polygon(self) -> shapely.Polygon:
        poly = shapely.Polygon(_as_xy(self.vertices))
        shapely.prepare(poly)
        return poly

    @cached_property
    def segment_tree(self) -> shapely.STRtree:
        coords = np.stack([_as_xy(self.starts), _as_xy(self.ends)], axis=1)
        return shapely.STRtree(shapely.linestrings(coords))

    def check_simple(self) -> tuple[bool, str]:
        """
        self-intersection 검사.

        Returns:
            tuple[bool, str]: (단순 여부, 이유)
        """
        if self.n_segments > SIMPLICITY_CHECK_MAX_SEGMENTS:
            logger.debug("simplicity check skipped (%d segments)", self.n_segments)
            return True, "skipped"
        ring = shapely.LinearRing(_as_xy(self.vertices))
        if not ring.is_simple:
            return False, "curve self-intersects"
        return True, "ok"

    # ============================================================
    # 거리 / 포함 판정
    # ============================================================
    def distance(self, z) -> np.ndarray | float:
        """점에서 polyline 까지의 정확한 거리"""
        zz = np.asarray(z, dtype=complex)
        pts = shapely.points(_as_xy(zz))
        out = self.geometry_distance(pts).reshape(zz.shape)
        return float(out) if out.ndim == 0 else out

    def geometry_distance(self, geoms: np.ndarray) -> np.ndarray:
        """shapely geometry 배열(예: Whitney 박스)에서 γ 까지의 거리"""
        geoms = np.asarray(geoms, dtype=object).ravel()
        idx, dist = self.segment_tree.query_nearest(geoms, return_distance=True, all_matches=False)
        out = np.empty(geoms.size, dtype=float)
        out[idx[0]] = dist
        return out

    @property
    def boundary_tolerance(self) -> float:
        return BOUNDARY_TOLERANCE_RELATIVE * self.nominal_diameter

    def inside_mask(self, z) -> np.ndarray:
        """strict interior (경계 밴드 제외 없이 polygon 내부 판정만)"""
        zz = np.asarray(z, dtype=complex)
        return shapely.contains_xy(self.polygon, zz.real, zz.imag)

    def locate(self, z) -> np.ndarray:
        """정수 코드 배열: 1 inside, 0 boundary, -1 outside"""
        zz = np.asarray(z, dtype=complex)
        codes = np.where(self.inside_mask(zz), INSIDE, OUTSIDE).astype(np.int8)
        on_boundary = np.asarray(self.distance(zz)) < self.boundary_tolerance
        codes[on_boundary] = BOUNDARY
        return codes

    def contains(self, z) -> Location | np.ndarray:
        """
        점 분류: inside / outside / boundary

        Returns:
            스칼라 입력이면 Location, 배열이면 Location 의 object 배열
        """
        codes = self.locate(z)
        if codes.ndim == 0:
            return _CODE_TO_LOCATION[int(codes)]
        return np.vectorize(_CODE_TO_LOCATION.get, otypes=[object])(codes)

    def __repr__(self) -> str:
        gen = f", generation={self.generation}" if self.generation is not None else ""
        return f"Curve({self.label}, n_segments={self.n_segments}{gen})"


def _shoelace(z: np.ndarray) -> float:
    w = np.roll(z, -1)
    return 0.5 * float(np.sum(z.real * w.imag - w.real * z.imag))
