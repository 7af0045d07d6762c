"""
quadrature/area.py
============================================================
영역 적분 (Teodorescu / Borel-Pompeiu 의 area 항)

설명:
- AreaRule 은 정사각형 셀 목록(중심, 한 변)입니다.
    build_area_rule   : Whitney 정사각형을 AREA_SUBDIVISION_LEVELS 단계 더 쪼갠 셀
                        (셀 한 변은 root_side / 2^(max_depth − AREA_GRADING_OFFSET) 이하)
                        + max_depth 경계 셀을 k×k 로 나눠 contains 로 클리핑한 셀
    uniform_grid_rule : bounding square 의 n×n 격자를 contains 로 클리핑 (비교용 기준선)
- 밀도는 셀 중심 값으로 고정하고 커널은 셀 위에서 정확히 적분합니다
  (quadrature.kernels.rect_kernel_integral). 특이점이 셀 안에 있어도 따로 처리할 필요가 없습니다.
- (셀 수) × (평가점 수) 가 AREA_BLOCK_SIZE 를 넘지 않도록 평가점을 블록으로 나눕니다.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Optional, Union

import numpy as np

from config import (
    AREA_BLOCK_SIZE,
    AREA_FD_STEP,
    AREA_GRADING_OFFSET,
    AREA_SUBDIVISION_LEVELS,
    BOUNDARY_CELL_SAMPLES,
)
from errors import SingularDensityError, StencilOutOfDomainError
from geometry.curve import Curve
from geometry.decomposition import DomainDecomposition
from quadrature.kernels import Kernel, rect_kernel_integral

logger = logging.getLogger(__name__)

Density = Union[Callable[[np.ndarray], np.ndarray], np.ndarray]


@dataclass(frozen=True, eq=False)
class AreaRule:
    curve: Curve
    centers: np.ndarray
    sides: np.ndarray
    source: str = "whitney"

    @property
    def n_cells(self) -> int:
        return int(self.centers.size)

    @property
    def total_area(self) -> float:
        return float(np.sum(self.sides**2))

    def __repr__(self) -> str:
        return f"AreaRule({self.source}, cells={self.n_cells}, area={self.total_area:.6f})"


@dataclass(frozen=True, eq=False)
class AreaIntegrand:
    kernel: Kernel
    density: Density

    def __post_init__(self):
        object.__setattr__(self, "kernel", Kernel(self.kernel))

    def values(self, rule: AreaRule) -> np.ndarray:
        """셀 중심에서의 밀도 값 (배열로 주어졌으면 그대로)"""
        if callable(self.density):
            vals = np.asarray(self.density(rule.centers), dtype=complex)
        else:
            vals = np.asarray(self.density, dtype=complex)
        vals = np.broadcast_to(vals, rule.centers.shape)
        if not np.all(np.isfinite(vals)):
            bad = int(np.count_nonzero(~np.isfinite(vals)))
            raise SingularDensityError(f"density is not finite at {bad} quadrature nodes")
        return vals


def _subdivide(centers: np.ndarray, sides: np.ndarray, k: int) -> tuple[np.ndarray, np.ndarray]:
    if k <= 1:
        return centers, sides
    frac = (np.arange(k) + 0.5) / k - 0.5
    offsets = (frac[:, None] + 1j * frac[None, :]).ravel()
    sub_c = (centers[:, None] + sides[:, None] * offsets[None, :]).ravel()
    sub_s = np.repeat(sides / k, k * k)
    return sub_c, sub_s


def build_area_rule(
    decomp: DomainDecomposition,
    subdivision_levels: int = AREA_SUBDIVISION_LEVELS,
    boundary_samples: int = BOUNDARY_CELL_SAMPLES,
    grading_offset: Optional[int] = AREA_GRADING_OFFSET,
) -> AreaRule:
    """
    Whitney 분해에서 Ω 의 area rule 을 만듭니다.

    Args:
        decomp: interior(또는 complement) Whitney 분해. Ω 안의 정사각형만 사용
        subdivision_levels: 정사각형당 추가 4분할 횟수 (최소)
        boundary_samples: 경계 셀 한 변당 샘플 수
        grading_offset: 셀 한 변 상한 root_side / 2^(max_depth − offset). None 이면 상한 없음

    Returns:
        AreaRule

    Note:
        - 상한 때문에 큰 정사각형은 2^subdivision_levels 보다 더 잘게 나뉩니다.
          그래서 max_depth 를 올리면 γ 근처뿐 아니라 안쪽 셀도 작아집니다.
    """
    mask = decomp.inside
    in_c, in_s = decomp.centers[mask], decomp.sides[mask]
    k = np.full(in_s.size, 2**subdivision_levels, dtype=np.int64)
    if grading_offset is not None and in_s.size:
        cap = decomp.root_side / 2.0 ** max(decomp.max_depth - grading_offset, 0)
        need = np.ceil(np.log2(np.maximum(in_s / cap, 1.0)) - 1e-9).astype(np.int64)
        k = np.maximum(k, 2**need)
    parts = [_subdivide(in_c[k == kk], in_s[k == kk], int(kk)) for kk in np.unique(k)]
    c = np.concatenate([p[0] for p in parts]) if parts else np.empty(0, dtype=complex)
    s = np.concatenate([p[1] for p in parts]) if parts else np.empty(0)

    bc = decomp.boundary_centers
    if bc.size and boundary_samples > 0:
        bs = np.full(bc.size, decomp.boundary_side)
        sub_c, sub_s = _subdivide(bc, bs, boundary_samples)
        keep = decomp.curve.inside_mask(sub_c)
        c = np.concatenate([c, sub_c[keep]])
        s = np.concatenate([s, sub_s[keep]])

    rule = AreaRule(decomp.curve, c, s, source=f"whitney(depth={decomp.max_depth})")
    logger.debug("area rule %r (polygon area %.6f)", rule, decomp.curve.area)
    return rule


def uniform_grid_rule(curve: Curve, n: int) -> AreaRule:
    """bounding square 의 n×n 격자 셀 중 중심이 Ω 안인 셀"""
    if n < 2:
        raise ValueError("grid size must be at least 2")
    xmin, ymin, xmax, ymax = curve.bbox
    side = max(xmax - xmin, ymax - ymin) / n
    xs = xmin + (np.arange(n) + 0.5) * side
    ys = ymin + (np.arange(n) + 0.5) * side
    centers = (xs[:, None] + 1j * ys[None, :]).ravel()
    centers = centers[curve.inside_mask(centers)]
    return AreaRule(curve, centers, np.full(centers.size, side), source=f"grid(n={n})")


def area_integral(
    rule: AreaRule,
    integrand: AreaIntegrand,
    z,
    prefactor: complex = 1.0,
    density_values: Optional[np.ndarray] = None,
) -> np.ndarray | complex:
    """
    prefactor × ∫_Ω K(ξ − z) g(ξ) dA(ξ)

    Args:
        rule: AreaRule
        integrand: 커널과 밀도
        z: 평가점 (Ω 안/밖 어디든 가능)
        prefactor: 예: 1/π
        density_values: 셀 중심 밀도를 이미 계산했다면 재사용

    Returns:
        complex 또는 np.ndarray
    """
    g = integrand.values(rule) if density_values is None else density_values
    zz = np.asarray(z, dtype=complex)
    flat = np.atleast_1d(zz).ravel()

    half = 0.5 * rule.sides
    cx, cy = rule.centers.real, rule.centers.imag
    block = max(1, AREA_BLOCK_SIZE // max(rule.n_cells, 1))
    out = np.empty(flat.size, dtype=complex)
    for start in range(0, flat.size, block):
        zb = flat[start:start + block]
        ux = cx[None, :] - zb.real[:, None]
        vy = cy[None, :] - zb.imag[:, None]
        cell = rect_kernel_integral(integrand.kernel, ux - half, ux + half, vy - half, vy + half)
        out[start:start + block] = cell @ g

    out = prefactor * out
    return complex(out[0]) if zz.ndim == 0 else out.reshape(zz.shape)


def cauchy_area_potential(rule: AreaRule, g: Density, z, density_values: Optional[np.ndarray] = None):
    """−(1/π) ∫_Ω g(ξ)/(ξ−z) dA"""
    return area_integral(rule, AreaIntegrand(Kernel.CAUCHY, g), z, prefactor=-1.0 / np.pi,
                         density_values=density_values)


def wirtinger_of_area_potential(rule: AreaRule, g: Density, z, h: float = AREA_FD_STEP):
    """
    Cauchy area potential 의 ∂z̄ 유한차분 (Vekua 항등식 ∂z̄[−(1/π)∫g/(ξ−z)dA] = g(z)).

    Note:
        - dist(z, γ) ≤ 3h 이면 스텐실이 Ω 를 벗어날 수 있으므로 StencilOutOfDomain.
    """
    zz = np.asarray(z, dtype=complex)
    flat = np.atleast_1d(zz).ravel()
    curve = rule.curve
    dist = np.atleast_1d(curve.distance(flat))
    inside = curve.inside_mask(flat)
    if not np.all(inside & (dist > 3.0 * h)):
        raise StencilOutOfDomainError(f"finite-difference stencil (h={h:.3e}) leaves the domain")

    g_vals = AreaIntegrand(Kernel.CAUCHY, g).values(rule)
    stencil = np.concatenate([flat + h, flat - h, flat + 1j * h, flat - 1j * h])
    p = cauchy_area_potential(rule, g, stencil, density_values=g_vals).reshape(4, flat.size)
    dx = (p[0] - p[1]) / (2.0 * h)
    dy = (p[2] - p[3]) / (2.0 * h)
    out = 0.5 * (dx + 1j * dy)
    return complex(out[0]) if zz.ndim == 0 else out.reshape(zz.shape)
