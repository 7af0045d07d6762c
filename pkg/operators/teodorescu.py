"""
operators/teodorescu.py
============================================================
Teodorescu 형 연산자 T_Ω^L (L_{α,β} 의 오른쪽 역원)

T[g](z) = (1/π) ∫_Ω [ α*·(ξ−z)/conj(ξ−z)·conj(g(ξ)) − β*·ln|ξ−z|²·g(ξ) ] dA(ξ)

설명:
- Ω 안의 z 에서 L_{α,β} T[g] = g, Ω₋ 의 z 에서 0 입니다.
- ∂z T[g] 는 Cauchy 커널 두 개로 닫힌 형태가 있습니다.
    ∂z T[g] = −α*(1/π)·conj(∫ g/(ξ−z) dA) + β*(1/π)·∫ g/(ξ−z) dA
- g 는 콜러블이거나 area rule 셀 중심에 맞춘 배열입니다.
"""

from __future__ import annotations

import logging

import numpy as np

from config import AREA_FD_STEP
from elasticity.operator import apply_lame_operator_fd
from elasticity.params import LameParams
from errors import StencilOutOfDomainError
from quadrature.area import AreaIntegrand, AreaRule, Density, area_integral
from quadrature.kernels import Kernel

logger = logging.getLogger(__name__)


def _density_values(rule: AreaRule, g: Density) -> np.ndarray:
    return AreaIntegrand(Kernel.LOG_MODULUS, g).values(rule)


def teodorescu(params: LameParams, rule: AreaRule, g: Density, z):
    """
    T_Ω^L[g](z)

    Args:
        params: LameParams
        rule: Ω 의 AreaRule
        g: 밀도 (콜러블 또는 셀 중심 값 배열)
        z: 평가점 (γ 위만 아니면 Ω₊, Ω₋ 모두 가능)
    """
    vals = _density_values(rule, g)
    if not np.any(vals):
        zz = np.asarray(z, dtype=complex)
        return 0j if zz.ndim == 0 else np.zeros(zz.shape, dtype=complex)
    ratio = area_integral(rule, AreaIntegrand(Kernel.RATIO, vals), z, density_values=np.conj(vals))
    log = area_integral(rule, AreaIntegrand(Kernel.LOG_MODULUS, vals), z, density_values=vals)
    return (params.alpha_star * ratio - params.beta_star * log) / np.pi


def teodorescu_dz(params: LameParams, rule: AreaRule, g: Density, z):
    """∂z T_Ω^L[g](z) (Cauchy 커널 닫힌 형태)"""
    vals = _density_values(rule, g)
    cauchy = area_integral(rule, AreaIntegrand(Kernel.CAUCHY, vals), z, density_values=vals) / np.pi
    return -params.alpha_star * np.conj(cauchy) + params.beta_star * cauchy


def verify_right_inverse(
    params: LameParams,
    rule: AreaRule,
    g,
    z,
    h: float = AREA_FD_STEP,
) -> np.ndarray | float:
    """
    |L_{α,β}(T[g])(z) − g(z)| (Ω 안), |L_{α,β}(T[g])(z)| (Ω₋).

    Args:
        g: 콜러블 밀도 (기대값 g(z) 계산에 필요)
        h: 유한차분 스텝

    Raises:
        StencilOutOfDomainError: dist(z, γ) ≤ 3h
    """
    curve = rule.curve
    zz = np.asarray(z, dtype=complex)
    flat = np.atleast_1d(zz).ravel()
    dist = np.atleast_1d(curve.distance(flat))
    if np.any(dist <= 3.0 * h):
        raise StencilOutOfDomainError(f"probe within 3h={3.0 * h:.3e} of the boundary")

    vals = _density_values(rule, g)
    lt = np.atleast_1d(apply_lame_operator_fd(params, lambda w: teodorescu(params, rule, vals, w), flat, h=h))
    expected = np.where(curve.inside_mask(flat), np.asarray(g(flat), dtype=complex), 0.0)
    residual = np.abs(lt - expected)
    logger.debug("right inverse residuals: %s", residual)
    return float(residual[0]) if zz.ndim == 0 else residual.reshape(zz.shape)
