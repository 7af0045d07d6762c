"""
quadrature/contour.py
============================================================
polyline 위의 경계 적분

설명:
- 밀도는 꼭짓점 값이고 세그먼트 위에서는 선형 보간합니다.
- cauchy / conj_cauchy 커널은 세그먼트마다 정확히 적분합니다 (선형 밀도).
    ∫_a^b ρ(ξ)/(ξ−z) dξ = ρ(z)·Log((b−z)/(a−z)) + (ρ_b − ρ_a)
  여기서 ρ(z) 는 선형 밀도의 복소 외삽값입니다.
  직선 세그먼트에서는 dξ̄ = (ē/e)·dξ 이므로 dξ̄ 측도도 같은 식으로 처리합니다.
- ratio / log_modulus 커널은 세그먼트당 고정 Gauss-Legendre 규칙을 씁니다.
- dist(z, γ) < CONTOUR_GUARD_FACTOR × 최대 세그먼트 길이 이면 TooCloseToBoundary.
  경계값은 operators.boundary_limit 을 통해서만 구합니다.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from config import AREA_BLOCK_SIZE, CONTOUR_GAUSS_NODES, CONTOUR_GUARD_FACTOR
from errors import BadDiscretizationError, TooCloseToBoundaryError
from geometry.curve import Curve
from quadrature.kernels import Kernel, Measure, kernel_value

logger = logging.getLogger(__name__)

_GAUSS_T, _GAUSS_W = np.polynomial.legendre.leggauss(CONTOUR_GAUSS_NODES)
# [-1, 1] → [0, 1]
_GAUSS_T = 0.5 * (_GAUSS_T + 1.0)
_GAUSS_W = 0.5 * _GAUSS_W


@dataclass(frozen=True, eq=False)
class ContourIntegrand:
    kernel: Kernel
    density: np.ndarray
    measure: Measure = Measure.DXI

    def __post_init__(self):
        object.__setattr__(self, "kernel", Kernel(self.kernel))
        object.__setattr__(self, "measure", Measure(self.measure))
        object.__setattr__(self, "density", np.asarray(self.density, dtype=complex).ravel())


def check_contour_guard(curve: Curve, z: np.ndarray) -> None:
    """가드 거리보다 경계에 가까운 점이 있으면 TooCloseToBoundary"""
    guard = CONTOUR_GUARD_FACTOR * curve.max_segment_length
    dist = np.atleast_1d(curve.distance(z))
    if dist.size and float(dist.min()) < guard:
        raise TooCloseToBoundaryError(
            f"evaluation point at distance {float(dist.min()):.3e} < guard {guard:.3e}; "
            "refine the curve or use boundary_limit"
        )


def _cauchy_block(curve: Curve, rho: np.ndarray, z: np.ndarray, measure: Measure) -> np.ndarray:
    a, b = curve.starts, curve.ends
    rho_a, rho_b = rho, np.roll(rho, -1)
    e = b - a
    slope = (rho_b - rho_a) / e
    zc = z[:, None]
    rho_ext = rho_a[None, :] + slope[None, :] * (zc - a[None, :])
    seg = rho_ext * np.log((b[None, :] - zc) / (a[None, :] - zc)) + (rho_b - rho_a)[None, :]
    if measure is Measure.DXI_BAR:
        seg = seg * (np.conj(e) / e)[None, :]
    return seg.sum(axis=1)


def _gauss_block(curve: Curve, rho: np.ndarray, kernel: Kernel, z: np.ndarray, measure: Measure) -> np.ndarray:
    a, e = curve.starts, curve.edges
    rho_a, rho_b = rho, np.roll(rho, -1)
    # (segment, node)
    xi = a[:, None] + e[:, None] * _GAUSS_T[None, :]
    dens = rho_a[:, None] + (rho_b - rho_a)[:, None] * _GAUSS_T[None, :]
    step = e if measure is Measure.DXI else np.conj(e)
    weights = (dens * _GAUSS_W[None, :]) * step[:, None]
    k = kernel_value(kernel, xi[None, :, :] - z[:, None, None])
    return np.einsum("msq,sq->m", k, weights)


def contour_integral(
    curve: Curve,
    integrand: ContourIntegrand,
    z,
    prefactor: complex = 1.0,
    guard: bool = True,
) -> np.ndarray | complex:
    """
    prefactor × ∮_γ K(ξ − z) ρ(ξ) dξ (또는 dξ̄)

    Args:
        curve: 경계 곡선
        integrand: 커널 / 꼭짓점 밀도 / 측도
        z: 평가점 (스칼라 또는 배열)
        prefactor: 정규화 상수 (예: 1/(2πi))
        guard: False 면 경계 근접 가드를 끕니다 (내부 사용 전용)

    Returns:
        complex 또는 np.ndarray
    """
    rho = integrand.density
    if rho.size != curve.n_segments:
        raise BadDiscretizationError(
            f"density has {rho.size} values but the curve has {curve.n_segments} vertices"
        )
    zz = np.asarray(z, dtype=complex)
    flat = np.atleast_1d(zz).ravel()
    if guard:
        check_contour_guard(curve, flat)

    per_point = curve.n_segments * (1 if integrand.kernel in (Kernel.CAUCHY, Kernel.CONJ_CAUCHY) else CONTOUR_GAUSS_NODES)
    block = max(1, AREA_BLOCK_SIZE // max(per_point, 1))
    out = np.empty(flat.size, dtype=complex)
    for start in range(0, flat.size, block):
        zb = flat[start:start + block]
        if integrand.kernel is Kernel.CAUCHY:
            out[start:start + block] = _cauchy_block(curve, rho, zb, integrand.measure)
        elif integrand.kernel is Kernel.CONJ_CAUCHY:
            # ∮ρ/conj(ξ−z) dμ = conj(∮ conj(ρ)/(ξ−z) conj(dμ))
            swapped = Measure.DXI if integrand.measure is Measure.DXI_BAR else Measure.DXI_BAR
            out[start:start + block] = np.conj(_cauchy_block(curve, np.conj(rho), zb, swapped))
        else:
            out[start:start + block] = _gauss_block(curve, rho, integrand.kernel, zb, integrand.measure)

    out = prefactor * out
    return complex(out[0]) if zz.ndim == 0 else out.reshape(zz.shape)


def cauchy_integral(curve: Curve, density, z, measure: Measure = Measure.DXI, guard: bool = True):
    """(1/2πi) ∮ ρ/(ξ−z) dξ 단축 함수"""
    return contour_integral(curve, ContourIntegrand(Kernel.CAUCHY, density, measure), z,
                            prefactor=1.0 / (2j * np.pi), guard=guard)


def conj_cauchy_integral(curve: Curve, density, z, measure: Measure = Measure.DXI_BAR, guard: bool = True):
    """(1/2πi) ∮ ρ/conj(ξ−z) dξ̄ 단축 함수"""
    return contour_integral(curve, ContourIntegrand(Kernel.CONJ_CAUCHY, density, measure), z,
                            prefactor=1.0 / (2j * np.pi), guard=guard)
