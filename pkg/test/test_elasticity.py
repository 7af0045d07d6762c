"""
test_elasticity.py
============================================================
탄성 상수, 테스트 필드, L_{α,β} 연산자 테스트

테스트 내용:
1. make_params 파생 계수와 계수 항등식
2. universal displacement 가 L_{α,β} 의 커널인지 (정확 / 유한차분)
3. 알려진 필드의 L_{α,β} 값 (|z|², z²z̄, z²)
4. 유한차분 스텐실 가드와 O(h²) 수렴
5. body force 변환, dilatation

실행:
    pytest test/test_elasticity.py
"""

import numpy as np
import pytest

from elasticity.fields import (
    NAMED_FIELDS,
    ClosedFormField,
    conj_power_field,
    exp_field,
    modulus_square_field,
    power_field,
    sin_modulus_field,
    universal_displacement,
    z2_zbar_field,
)
from elasticity.operator import (
    apply_lame_operator,
    apply_lame_operator_fd,
    body_force_to_complex,
    complex_to_body_force,
    dilatation,
    first_wirtinger_fd,
    wirtinger_second_fd,
)
from elasticity.params import make_params, validate_lame_constants
from errors import MissingDerivativeError, NotHolomorphicError, ParameterDomainError, StencilOutOfDomainError

POINTS = np.array([0.1 + 0.2j, -0.4 + 0.3j, 0.5 - 0.5j, -0.2 - 0.6j])


# =========================
# 1) 탄성 상수
# =========================
def test_unit_params():
    p = make_params(1.0, 1.0)
    assert p.alpha == pytest.approx(1.0)
    assert p.beta == pytest.approx(2.0)
    assert p.alpha_star == pytest.approx(-1.0 / 3.0)
    assert p.beta_star == pytest.approx(-2.0 / 3.0)
    assert p.sigma == pytest.approx(0.25)


def test_identities_on_grid():
    for mu in (0.1, 1.0, 7.5):
        for lam in (-0.6 * mu, 0.0, 1.0, 25.0):
            first, second = make_params(lam, mu).identity_residuals()
            assert first < 1e-12
            assert second < 1e-12


def test_symmetric_sum_is_not_zero():
    p = make_params(1.0, 1.0)
    assert p.symmetric_sum == pytest.approx(-4.0 / 3.0)
    assert p.symmetric_sum == pytest.approx(2 * p.alpha * p.beta / (p.alpha**2 - p.beta**2))


@pytest.mark.parametrize("lam, mu", [(1.0, 0.0), (1.0, -2.0), (-1.0, 1.0)])
def test_invalid_params(lam, mu):
    ok, reason = validate_lame_constants(lam, mu)
    assert not ok and reason
    with pytest.raises(ParameterDomainError):
        make_params(lam, mu)


# =========================
# 2) 커널 원소
# =========================
@pytest.mark.parametrize("phi", [power_field(2), power_field(3), exp_field()])
@pytest.mark.parametrize("lam, mu", [(1.0, 1.0), (2.0, 0.5), (-0.3, 1.0)])
def test_universal_displacement_in_kernel(phi, lam, mu):
    p = make_params(lam, mu)
    f = universal_displacement(0.7 - 0.2j, phi)
    assert np.max(np.abs(apply_lame_operator(p, f, POINTS))) < 1e-12
    assert np.max(np.abs(apply_lame_operator_fd(p, f, POINTS))) < 1e-6


def test_universal_displacement_rejects_antiholomorphic_phi():
    with pytest.raises(NotHolomorphicError):
        universal_displacement(1.0, conj_power_field(2))


# =========================
# 3) 알려진 L 값
# =========================
def test_known_operator_values():
    p = make_params(1.0, 1.0)
    assert np.allclose(apply_lame_operator(p, modulus_square_field(), POINTS), p.beta)
    assert np.allclose(apply_lame_operator(p, z2_zbar_field(), POINTS), 2 * (p.alpha + p.beta) * POINTS)
    assert np.allclose(apply_lame_operator(p, power_field(2), POINTS), 2 * p.alpha)


def test_missing_second_derivatives():
    f = ClosedFormField(value=lambda z: z * z, name="bare")
    with pytest.raises(MissingDerivativeError):
        apply_lame_operator(make_params(1.0, 1.0), f, 0.1)


def test_named_fields_build():
    for name, factory in NAMED_FIELDS.items():
        f = factory()
        assert f.has_first, name
        assert np.all(np.isfinite(f(POINTS)))


# =========================
# 4) 유한차분
# =========================
def test_fd_matches_exact_on_smooth_field():
    p = make_params(1.0, 1.0)
    f = sin_modulus_field()
    exact = apply_lame_operator(p, f, POINTS)
    assert np.max(np.abs(apply_lame_operator_fd(p, f, POINTS) - exact)) < 1e-5


def test_fd_second_order_rate():
    p = make_params(1.0, 1.0)
    f = sin_modulus_field()
    z0 = 0.3 + 0.2j
    ref = apply_lame_operator(p, f, z0)
    e1 = abs(apply_lame_operator_fd(p, f, z0, h=1e-2) - ref)
    e2 = abs(apply_lame_operator_fd(p, f, z0, h=5e-3) - ref)
    assert 3.2 < e1 / e2 < 4.8


def test_second_wirtinger_fd_on_quadratic():
    f = modulus_square_field()
    dzdz, dzdzb, dzbdzb = wirtinger_second_fd(f, POINTS, h=1e-3)
    assert np.max(np.abs(dzdz)) < 1e-6
    assert np.max(np.abs(dzdzb - 1.0)) < 1e-6
    assert np.max(np.abs(dzbdzb)) < 1e-6


def test_first_wirtinger_fd():
    f = z2_zbar_field()
    dz, dzbar = first_wirtinger_fd(f, POINTS, h=1e-5)
    assert np.max(np.abs(dz - f.dz(POINTS))) < 1e-8
    assert np.max(np.abs(dzbar - f.dzbar(POINTS))) < 1e-8


def test_stencil_guard():
    f = power_field(2)
    with pytest.raises(StencilOutOfDomainError):
        wirtinger_second_fd(f, 0.5, h=1e-2, domain=lambda pts: np.abs(pts) < 0.5)


# =========================
# 5) 변환 / dilatation
# =========================
def test_body_force_round_trip():
    g = body_force_to_complex(1.0, 2.0)
    assert g == pytest.approx(-0.5 - 1.0j)
    assert complex_to_body_force(g) == pytest.approx((1.0, 2.0))


def test_body_force_callables():
    g = body_force_to_complex(lambda z: np.real(z), 3.0)
    assert g(np.array([2.0]))[0] == pytest.approx(-1.0 - 1.5j)


def test_dilatation():
    assert dilatation(power_field(1), 0.3 + 0.1j) == pytest.approx(2.0)
    theta = dilatation(modulus_square_field(), POINTS)
    assert np.allclose(theta, 2.0 * POINTS.real)
