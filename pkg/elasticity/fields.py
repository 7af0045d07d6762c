"""
elasticity/fields.py
============================================================
정확한 Wirtinger 도함수를 가진 복소 필드 (테스트 오라클)

설명:
- ClosedFormField는 z ↦ f(z)와 선택적인 도함수 콜러블을 묶은 불변 객체입니다.
    dz, dzbar                 : ∂z f, ∂z̄ f
    dz_dz, dz_dzbar, dzbar_dzbar : 2계 Wirtinger 도함수 (혼합 도함수는 하나)
- 모든 콜러블은 numpy 배열(complex)을 받아 같은 shape의 배열을 돌려줍니다.
- 기호 미분은 하지 않습니다. 테스트 필드는 손으로 미분해서 등록합니다.

주요 항목:
- universal_displacement(A, phi): f = Az + conj(φ(z)), 모든 (λ, μ)에서 L f = 0
- NAMED_FIELDS: CLI(`jet make --field NAME`)와 verify 스위트가 쓰는 레지스트리
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from errors import NotHolomorphicError

ComplexFn = Callable[[np.ndarray], np.ndarray]

# holomorphic 여부를 확인할 고정 샘플 점
_HOLOMORPHY_SAMPLES = np.array([0.1 + 0.2j, -0.3 + 0.05j, 0.25 - 0.4j, 0.5 + 0.5j, -0.45 - 0.15j])


def _zero(z):
    return np.zeros_like(np.asarray(z, dtype=complex))


def _const(c: complex) -> ComplexFn:
    return lambda z: np.full_like(np.asarray(z, dtype=complex), c)


@dataclass(frozen=True)
class ClosedFormField:
    value: ComplexFn
    dz: Optional[ComplexFn] = None
    dzbar: Optional[ComplexFn] = None
    dz_dz: Optional[ComplexFn] = None
    dz_dzbar: Optional[ComplexFn] = None
    dzbar_dzbar: Optional[ComplexFn] = None
    name: str = field(default="field", compare=False)

    def __call__(self, z):
        return self.value(np.asarray(z, dtype=complex))

    @property
    def has_first(self) -> bool:
        return self.dz is not None and self.dzbar is not None

    @property
    def has_second(self) -> bool:
        return all(fn is not None for fn in (self.dz_dz, self.dz_dzbar, self.dzbar_dzbar))

    def laplacian_defect(self, points, h: float = 1e-3) -> float:
        """
        4·∂z∂z̄ f 와 유한차분 Laplacian 의 최대 차이.

        Note:
            - 5점 Laplacian (O(h²))과 비교하므로 h를 너무 작게 잡지 않습니다.
        """
        z = np.asarray(points, dtype=complex)
        f = self.value
        lap = (f(z + h) + f(z - h) + f(z + 1j * h) + f(z - 1j * h) - 4.0 * f(z)) / (h * h)
        return float(np.max(np.abs(4.0 * self.dz_dzbar(z) - lap)))


# ============================================================
# Universal displacements
# ============================================================
def universal_displacement(A: complex, phi: ClosedFormField) -> ClosedFormField:
    """
    f(z) = A z + conj(φ(z)) 를 정확한 도함수와 함께 만듭니다.

    Args:
        A: 복소 상수
        phi: holomorphic 필드 (dz 필수)

    Returns:
        ClosedFormField: L_{α,β} f ≡ 0 인 필드

    Note:
        - phi.dzbar가 있으면 샘플 점에서 0인지 확인하고, 없으면 중앙차분으로 확인합니다.
    """
    if phi.dz is None:
        raise NotHolomorphicError("phi must carry its exact derivative dz")
    _check_holomorphic(phi)

    A = complex(A)
    phi_dz = phi.dz
    phi_dzdz = phi.dz_dz

    return ClosedFormField(
        value=lambda z: A * z + np.conj(phi.value(z)),
        dz=_const(A),
        dzbar=lambda z: np.conj(phi_dz(z)),
        dz_dz=_zero,
        dz_dzbar=_zero,
        dzbar_dzbar=(lambda z: np.conj(phi_dzdz(z))) if phi_dzdz is not None else None,
        name=f"universal(A={A}, phi={phi.name})",
    )


def _check_holomorphic(phi: ClosedFormField, tol: float = 1e-8) -> None:
    z = _HOLOMORPHY_SAMPLES
    if phi.dzbar is not None:
        defect = float(np.max(np.abs(phi.dzbar(z))))
    else:
        h = 1e-5
        f = phi.value
        dzbar = 0.5 * ((f(z + h) - f(z - h)) / (2 * h) + 1j * (f(z + 1j * h) - f(z - 1j * h)) / (2 * h))
        defect = float(np.max(np.abs(dzbar)))
    if defect > tol:
        raise NotHolomorphicError(f"phi.dzbar is nonzero at sample points (max={defect:.3e})")


# ============================================================
# 테스트 필드
# ============================================================
def constant_field(c: complex) -> ClosedFormField:
    return ClosedFormField(_const(c), _zero, _zero, _zero, _zero, _zero, name=f"const({c})")


def power_field(n: int) -> ClosedFormField:
    """z^n (holomorphic)"""
    if n == 0:
        return constant_field(1.0)
    return ClosedFormField(
        value=lambda z: z**n,
        dz=lambda z: n * z ** (n - 1),
        dzbar=_zero,
        dz_dz=(lambda z: n * (n - 1) * z ** (n - 2)) if n >= 2 else _zero,
        dz_dzbar=_zero,
        dzbar_dzbar=_zero,
        name=f"z^{n}",
    )


def exp_field() -> ClosedFormField:
    return ClosedFormField(np.exp, np.exp, _zero, np.exp, _zero, _zero, name="exp(z)")


def conj_power_field(n: int) -> ClosedFormField:
    """conj(z)^n"""
    return ClosedFormField(
        value=lambda z: np.conj(z) ** n,
        dz=_zero,
        dzbar=lambda z: n * np.conj(z) ** (n - 1),
        dz_dz=_zero,
        dz_dzbar=_zero,
        dzbar_dzbar=(lambda z: n * (n - 1) * np.conj(z) ** (n - 2)) if n >= 2 else _zero,
        name=f"conj(z)^{n}",
    )


def modulus_square_field() -> ClosedFormField:
    """|z|² : L f = β"""
    return ClosedFormField(
        value=lambda z: (z * np.conj(z)),
        dz=lambda z: np.conj(z),
        dzbar=lambda z: np.asarray(z, dtype=complex),
        dz_dz=_zero,
        dz_dzbar=_const(1.0),
        dzbar_dzbar=_zero,
        name="|z|^2",
    )


def z2_zbar_field() -> ClosedFormField:
    """z² z̄ : L f = 2(α+β) z"""
    return ClosedFormField(
        value=lambda z: z * z * np.conj(z),
        dz=lambda z: 2.0 * z * np.conj(z),
        dzbar=lambda z: z * z,
        dz_dz=lambda z: 2.0 * np.conj(z),
        dz_dzbar=lambda z: 2.0 * np.asarray(z, dtype=complex),
        dzbar_dzbar=_zero,
        name="z^2*conj(z)",
    )


def sin_modulus_field() -> ClosedFormField:
    """sin(|z|²) : 유한차분 수렴률 테스트용 비다항 필드"""

    def r2(z):
        return (z * np.conj(z)).real

    return ClosedFormField(
        value=lambda z: np.sin(r2(z)) + 0j,
        dz=lambda z: np.cos(r2(z)) * np.conj(z),
        dzbar=lambda z: np.cos(r2(z)) * z,
        dz_dz=lambda z: -np.sin(r2(z)) * np.conj(z) ** 2,
        dz_dzbar=lambda z: np.cos(r2(z)) - np.sin(r2(z)) * r2(z),
        dzbar_dzbar=lambda z: -np.sin(r2(z)) * z**2,
        name="sin(|z|^2)",
    )


# ============================================================
# 이름 레지스트리 (CLI / verify)
# ============================================================
# "이름": 팩토리
NAMED_FIELDS: dict[str, Callable[[], ClosedFormField]] = {
    "one": lambda: constant_field(1.0),
    "z": lambda: power_field(1),
    "z2": lambda: power_field(2),
    "zbar2": lambda: conj_power_field(2),
    "abs2": modulus_square_field,
    "z2zbar": z2_zbar_field,
    "z_plus_zbar2": lambda: universal_displacement(1.0, power_field(2)),
    "exp": exp_field,
}
