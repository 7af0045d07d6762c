"""
elasticity/operator.py
============================================================
Lamé-Navier 연산자 L_{α,β} 와 Wirtinger 유한차분

설명:
- L_{α,β}[f] = α ∂z̄∂z̄ conj(f) + β ∂z̄∂z f
             = α conj(∂z∂z f) + β ∂z∂z̄ f
- 정확한 도함수(ClosedFormField)로 계산하거나, 5x5 중앙차분 스텐실로 계산합니다.
- 체력(body force) (X, Y) ↔ 복소 우변 g = −(X+iY)/2 변환도 여기에 있습니다.

유한차분:
- ∂x 중앙차분(스텝 h)을 두 번 합성합니다.
    D_xx = (f(z+2h) − 2f(z) + f(z−2h)) / 4h²
    D_xy = (f(z+h+ih) − f(z+h−ih) − f(z−h+ih) + f(z−h−ih)) / 4h²
- 오차는 O(h²) 입니다. (C⁴ 필드에서 h를 절반으로 줄이면 오차가 ~1/4)
"""

from __future__ import annotations

import logging
from typing import Callable, Optional, Union

import numpy as np

from config import FD_STEP_RELATIVE
from elasticity.fields import ClosedFormField
from elasticity.params import LameParams
from errors import MissingDerivativeError, StencilOutOfDomainError

logger = logging.getLogger(__name__)

FieldLike = Union[ClosedFormField, Callable[[np.ndarray], np.ndarray]]
DomainPredicate = Callable[[np.ndarray], np.ndarray]

# 코너 오프셋 (a, b, 부호), 단위 h
_CORNER_OFFSETS = ((1, 1, 1.0), (1, -1, -1.0), (-1, 1, -1.0), (-1, -1, 1.0))


# ============================================================
# 정확한 도함수 버전
# ============================================================
def apply_lame_operator(params: LameParams, f: ClosedFormField, z) -> np.ndarray | complex:
    """
    정확한 2계 Wirtinger 도함수로 L_{α,β}[f](z) 를 계산합니다.

    Args:
        params: LameParams
        f: dz_dz, dz_dzbar 를 가진 ClosedFormField
        z: 점 (스칼라 또는 배열)

    Returns:
        complex 또는 np.ndarray

    Note:
        - ∂z̄∂z̄ conj(f) = conj(∂z∂z f) 이므로 dzbar_dzbar 는 필요 없습니다.
    """
    if f.dz_dz is None or f.dz_dzbar is None:
        raise MissingDerivativeError(
            f"field '{f.name}' has no exact second derivatives; use apply_lame_operator_fd"
        )
    zz = np.asarray(z, dtype=complex)
    out = params.alpha * np.conj(f.dz_dz(zz)) + params.beta * f.dz_dzbar(zz)
    return complex(out) if out.ndim == 0 else out


# ============================================================
# 유한차분 버전
# ============================================================
def _default_step(z: np.ndarray) -> float:
    scale = max(1.0, float(np.max(np.abs(z))) if z.size else 1.0)
    return FD_STEP_RELATIVE * scale


def _stencil_points(z: np.ndarray, h: float) -> np.ndarray:
    offsets = [complex(a, b) for a in (-2, -1, 0, 1, 2) for b in (-2, -1, 0, 1, 2)]
    return z[..., None] + h * np.array(offsets)


def wirtinger_second_fd(
    f: FieldLike,
    z,
    h: Optional[float] = None,
    domain: Optional[DomainPredicate] = None,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    중앙차분으로 2계 Wirtinger 도함수 3개를 근사합니다.

    Args:
        f: z 배열을 받아 complex 배열을 돌려주는 필드
        z: 점 (스칼라 또는 배열)
        h: 스텝 (None이면 FD_STEP_RELATIVE × max(1, |z|))
        domain: 점 배열 → bool 배열. 스텐실 점 중 하나라도 False면 StencilOutOfDomain

    Returns:
        (∂z∂z f, ∂z∂z̄ f, ∂z̄∂z̄ f)
    """
    zz = np.asarray(z, dtype=complex)
    if h is None:
        h = _default_step(zz)
    if not h > 0:
        raise ValueError(f"finite-difference step must be positive (h={h})")

    if domain is not None:
        stencil = _stencil_points(zz, h)
        inside = np.asarray(domain(stencil), dtype=bool)
        if not np.all(inside):
            raise StencilOutOfDomainError(
                f"{int(np.size(inside) - np.count_nonzero(inside))} stencil points leave the domain (h={h:.3e})"
            )

    f0 = f(zz)
    dxx = (f(zz + 2.0 * h) - 2.0 * f0 + f(zz - 2.0 * h)) / (4.0 * h * h)
    dyy = (f(zz + 2.0j * h) - 2.0 * f0 + f(zz - 2.0j * h)) / (4.0 * h * h)
    dxy = sum(sign * f(zz + h * complex(a, b)) for a, b, sign in _CORNER_OFFSETS) / (4.0 * h * h)

    dz_dz = 0.25 * (dxx - dyy - 2.0j * dxy)
    dz_dzbar = 0.25 * (dxx + dyy)
    dzbar_dzbar = 0.25 * (dxx - dyy + 2.0j * dxy)
    return dz_dz, dz_dzbar, dzbar_dzbar


def apply_lame_operator_fd(
    params: LameParams,
    f: FieldLike,
    z,
    h: Optional[float] = None,
    domain: Optional[DomainPredicate] = None,
) -> np.ndarray | complex:
    """
    유한차분으로 L_{α,β}[f](z) 를 계산합니다. (블랙박스 필드용)

    Note:
        - 선형 필드와 2차 다항식은 반올림 오차 범위에서 정확합니다.
        - area potential 처럼 노이즈가 있는 필드는 h를 셀 크기보다 크게 잡아야 합니다.
    """
    dz_dz, dz_dzbar, _ = wirtinger_second_fd(f, z, h=h, domain=domain)
    out = params.alpha * np.conj(dz_dz) + params.beta * dz_dzbar
    out = np.asarray(out)
    return complex(out) if out.ndim == 0 else out


def first_wirtinger_fd(f: FieldLike, z, h: Optional[float] = None) -> tuple[np.ndarray, np.ndarray]:
    """중앙차분 (∂z f, ∂z̄ f)"""
    zz = np.asarray(z, dtype=complex)
    if h is None:
        h = _default_step(zz)
    dx = (f(zz + h) - f(zz - h)) / (2.0 * h)
    dy = (f(zz + 1j * h) - f(zz - 1j * h)) / (2.0 * h)
    return 0.5 * (dx - 1j * dy), 0.5 * (dx + 1j * dy)


# ============================================================
# 체력 변환 / 팽창
# ============================================================
def body_force_to_complex(X, Y):
    """
    g = −(X + iY)/2

    Note:
        - X, Y 가 콜러블이면 콜러블 g를 돌려주고, 값(스칼라/배열)이면 값을 돌려줍니다.
    """
    if callable(X) or callable(Y):
        fx = X if callable(X) else (lambda z, _c=X: np.full_like(np.asarray(z, dtype=float), _c))
        fy = Y if callable(Y) else (lambda z, _c=Y: np.full_like(np.asarray(z, dtype=float), _c))
        return lambda z: -0.5 * (np.asarray(fx(z)) + 1j * np.asarray(fy(z)))
    g = -0.5 * (np.asarray(X, dtype=float) + 1j * np.asarray(Y, dtype=float))
    return complex(g) if g.ndim == 0 else g


def complex_to_body_force(g):
    """(X, Y) = (−2 Re g, −2 Im g). body_force_to_complex 의 역변환."""
    if callable(g):
        return (lambda z: -2.0 * np.real(g(z))), (lambda z: -2.0 * np.imag(g(z)))
    arr = np.asarray(g, dtype=complex)
    X, Y = -2.0 * arr.real, -2.0 * arr.imag
    if arr.ndim == 0:
        return float(X), float(Y)
    return X, Y


def dilatation(f: ClosedFormField, z, h: Optional[float] = None):
    """
    θ = ∂z f + conj(∂z f) = 2 Re ∂z f  (변위 (u, v)의 divergence)

    Note:
        - f.dz 가 없으면 h 가 주어진 경우에만 중앙차분으로 대체합니다.
    """
    zz = np.asarray(z, dtype=complex)
    if f.dz is not None:
        dz = f.dz(zz)
    elif h is not None:
        dz, _ = first_wirtinger_fd(f, zz, h)
    else:
        raise MissingDerivativeError(f"field '{f.name}' has no exact dz; pass h for finite differences")
    theta = 2.0 * np.real(dz)
    return float(theta) if np.ndim(theta) == 0 else theta
