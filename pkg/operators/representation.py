"""
operators/representation.py
============================================================
Borel-Pompeiu 공식, Cauchy 표현식, 그리고 그 재료가 되는 두 표현 공식

설명:
- borel_pompeiu_rhs: 경계 항 네 개 + T_Ω^L[L_{α,β} f]. Ω 안에서 f(z), Ω₋ 에서 0.
- cauchy_repr: 경계 항 네 개만. L_{α,β} f = 0 인 f 를 Ω 안에서 재현합니다.
- ratio_kernel_repr:
    f = −(1/2πi)∮ f/conj(ξ−z) dξ̄ + (1/2πi)∮ R ∂ξf dξ̄ + (1/π)∫ R ∂ξ∂ξ f dA
- log_kernel_repr:
    f =  (1/2πi)∮ f/(ξ−z) dξ + (1/2πi)∮ ln|ξ−z|² ∂ξ̄f dξ̄ + (1/π)∫ ln|ξ−z|² ∂ξ∂ξ̄ f dA
  (R = (ξ−z)/conj(ξ−z)). 두 식 모두 Ω₋ 에서는 0 입니다.
- 경계 도함수는 ClosedFormField 의 정확한 도함수를 씁니다.
  (곡선 샘플을 수치 미분하지 않음)
"""

from __future__ import annotations

from typing import Optional

import numpy as np

from elasticity.fields import ClosedFormField
from elasticity.operator import apply_lame_operator
from elasticity.params import LameParams
from errors import MissingDerivativeError
from geometry.curve import Curve
from operators.lame_cauchy import contour_terms
from operators.teodorescu import teodorescu
from quadrature.area import AreaIntegrand, AreaRule, area_integral
from quadrature.contour import ContourIntegrand, cauchy_integral, conj_cauchy_integral, contour_integral
from quadrature.kernels import Kernel, Measure

_C = 1.0 / (2j * np.pi)


def _boundary_data(field: ClosedFormField, curve: Curve) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    if field.dz is None or field.dzbar is None:
        raise MissingDerivativeError(f"field '{field.name}' needs exact first derivatives on the boundary")
    t = curve.vertices
    return field.value(t), field.dz(t), field.dzbar(t)


def cauchy_repr(params: LameParams, curve: Curve, boundary, z):
    """
    Cauchy 표현식 (경계 항 네 개).

    Args:
        boundary: ClosedFormField 또는 꼭짓점 값 (f0, f1, f2) 튜플
    """
    if isinstance(boundary, ClosedFormField):
        f0, f1, f2 = _boundary_data(boundary, curve)
    else:
        f0, f1, f2 = boundary
    return contour_terms(params, curve, f0, f1, f2, z)


def borel_pompeiu_rhs(
    params: LameParams,
    curve: Curve,
    field: ClosedFormField,
    rule: AreaRule,
    z,
    lame_values: Optional[np.ndarray] = None,
):
    """
    Borel-Pompeiu 우변: 경계 항 + T_Ω^L[L_{α,β} f]

    Args:
        field: 정확한 1계 도함수와 (lame_values 가 없으면) 2계 도함수를 가진 필드
        rule: Ω 의 AreaRule
        lame_values: 셀 중심의 L_{α,β} f 값 (없으면 apply_lame_operator 로 계산)
    """
    f0, f1, f2 = _boundary_data(field, curve)
    out = contour_terms(params, curve, f0, f1, f2, z)
    lf = apply_lame_operator(params, field, rule.centers) if lame_values is None else lame_values
    if np.any(lf):
        out = out + teodorescu(params, rule, np.asarray(lf), z)
    return out


def ratio_kernel_repr(curve: Curve, field: ClosedFormField, rule: AreaRule, z):
    if field.dz is None or field.dz_dz is None:
        raise MissingDerivativeError(f"field '{field.name}' needs dz and dz_dz")
    t = curve.vertices
    out = -conj_cauchy_integral(curve, field.value(t), z)
    out = out + contour_integral(curve, ContourIntegrand(Kernel.RATIO, field.dz(t), Measure.DXI_BAR), z, prefactor=_C)
    dd = np.asarray(field.dz_dz(rule.centers), dtype=complex)
    if np.any(dd):
        out = out + area_integral(rule, AreaIntegrand(Kernel.RATIO, dd), z, prefactor=1.0 / np.pi)
    return out


def log_kernel_repr(curve: Curve, field: ClosedFormField, rule: AreaRule, z):
    if field.dzbar is None or field.dz_dzbar is None:
        raise MissingDerivativeError(f"field '{field.name}' needs dzbar and dz_dzbar")
    t = curve.vertices
    out = cauchy_integral(curve, field.value(t), z)
    out = out + contour_integral(curve, ContourIntegrand(Kernel.LOG_MODULUS, field.dzbar(t), Measure.DXI_BAR), z,
                                 prefactor=_C)
    mixed = np.asarray(field.dz_dzbar(rule.centers), dtype=complex)
    if np.any(mixed):
        out = out + area_integral(rule, AreaIntegrand(Kernel.LOG_MODULUS, mixed), z, prefactor=1.0 / np.pi)
    return out
