"""
operators/lame_cauchy.py
============================================================
Lamé-Cauchy transform C^L 과 그 ∂z

C^L f(z) = −αα*·(1/2πi)∮ f0/conj(ξ−z) dξ̄
           −ββ*·(1/2πi)∮ f0/(ξ−z) dξ
           +α* ·(1/2πi)∮ (ξ−z)/conj(ξ−z)·[α f1 + β conj(f1)] dξ̄
           +β* ·(1/2πi)∮ ln|ξ−z|²·[α conj(f1) dξ − β f2 dξ̄]

∂z C^L f(z) = −αα*·(1/2πi)∮ f1/conj(ξ−z) dξ̄ − ββ*·(1/2πi)∮ f1/(ξ−z) dξ
              + α*β·[ conj((1/2πi)∮ f1/(ξ−z) dξ) − (1/2πi)∮ conj(f1)/(ξ−z) dξ ]

설명:
- 경계 항 네 개는 Cauchy 표현식(cauchy_repr)과 Borel-Pompeiu 우변의 경계 부분과 같습니다.
- ∂z 식은 df0 = f1 dξ + f2 dξ̄ 과 αβ* = βα* 를 써서 부분적분한 결과이며
  Ω₊, Ω₋ 에서 같은 식입니다. Cauchy 커널만 쓰므로 세그먼트별로 정확합니다.
"""

from __future__ import annotations

import numpy as np

from elasticity.params import LameParams
from geometry.curve import Curve
from quadrature.contour import ContourIntegrand, cauchy_integral, conj_cauchy_integral, contour_integral
from quadrature.kernels import Kernel, Measure
from whitney.jet import WhitneyJet

_C = 1.0 / (2j * np.pi)


def contour_terms(
    params: LameParams,
    curve: Curve,
    f0: np.ndarray,
    f1: np.ndarray,
    f2: np.ndarray,
    z,
    guard: bool = True,
):
    """경계 항 네 개의 합 (f0, f1 = ∂ξ f, f2 = ∂ξ̄ f 는 꼭짓점 값)"""
    a, b = params.alpha, params.beta
    f0, f1, f2 = (np.broadcast_to(np.asarray(f, dtype=complex), (curve.n_segments,)) for f in (f0, f1, f2))

    out = -a * params.alpha_star * conj_cauchy_integral(curve, f0, z, guard=guard)
    out = out - b * params.beta_star * cauchy_integral(curve, f0, z, guard=guard)
    if np.any(f1) or np.any(f2):
        ratio_density = a * f1 + b * np.conj(f1)
        out = out + params.alpha_star * contour_integral(
            curve, ContourIntegrand(Kernel.RATIO, ratio_density, Measure.DXI_BAR), z, prefactor=_C, guard=guard
        )
        log_dxi = contour_integral(
            curve, ContourIntegrand(Kernel.LOG_MODULUS, a * np.conj(f1), Measure.DXI), z, prefactor=_C, guard=guard
        )
        log_dxibar = contour_integral(
            curve, ContourIntegrand(Kernel.LOG_MODULUS, -b * f2, Measure.DXI_BAR), z, prefactor=_C, guard=guard
        )
        out = out + params.beta_star * (log_dxi + log_dxibar)
    return out


def lame_cauchy_transform(params: LameParams, jet: WhitneyJet, z, guard: bool = True):
    """
    C^L f(z), z ∈ Ω₊ ∪ Ω₋

    Note:
        - 0 jet 이면 곧바로 0 을 돌려줍니다.
        - 전역 필드에서 만든 jet 이면 Ω₊ 에서 f − T[Lf], Ω₋ 에서 −T[Lf] 입니다.
    """
    if jet.is_zero():
        zz = np.asarray(z, dtype=complex)
        return 0j if zz.ndim == 0 else np.zeros(zz.shape, dtype=complex)
    return contour_terms(params, jet.curve, jet.f0, jet.f1, jet.f2, z, guard=guard)


def lame_cauchy_transform_dz(params: LameParams, jet: WhitneyJet, z, guard: bool = True):
    """∂z C^L f(z) (닫힌 형태, Ω₊ 와 Ω₋ 에서 같은 식)"""
    curve = jet.curve
    f1 = jet.f1
    zz = np.asarray(z, dtype=complex)
    if not np.any(f1):
        return 0j if zz.ndim == 0 else np.zeros(zz.shape, dtype=complex)
    a, b = params.alpha, params.beta
    cf1 = cauchy_integral(curve, f1, z, guard=guard)
    out = -a * params.alpha_star * conj_cauchy_integral(curve, f1, z, guard=guard)
    out = out - b * params.beta_star * cf1
    out = out + params.alpha_star * b * (np.conj(cf1) - cauchy_integral(curve, np.conj(f1), z, guard=guard))
    return out
