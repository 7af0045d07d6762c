"""
test_quadrature.py
============================================================
경계 적분 / 영역 적분 엔진 테스트

테스트 내용:
1. 직사각형 셀 위 정확한 커널 적분 (midpoint 합과 비교)
2. Cauchy / conj-Cauchy 경계 적분 (다각형 위에서 정확한 값)
3. 경계 근접 가드, 밀도 길이 검사
4. area rule 면적과 Cauchy area potential (단위 원판에서 T[1] = z̄)

실행:
    pytest test/test_quadrature.py
"""

import numpy as np
import pytest

from errors import BadDiscretizationError, SingularDensityError, StencilOutOfDomainError, TooCloseToBoundaryError
from geometry.decomposition import whitney_decompose
from geometry.generators import make_circle
from quadrature.area import (
    build_area_rule,
    cauchy_area_potential,
    uniform_grid_rule,
    wirtinger_of_area_potential,
)
from quadrature.contour import ContourIntegrand, cauchy_integral, conj_cauchy_integral, contour_integral
from quadrature.kernels import Kernel, Measure, kernel_value, rect_kernel_integral


@pytest.fixture(scope="module")
def circle():
    return make_circle(n_segments=256)


@pytest.fixture(scope="module")
def disk_rule(circle):
    return build_area_rule(whitney_decompose(circle, 7))


# =========================
# 1) 셀 위 커널 적분
# =========================
@pytest.mark.parametrize("kernel", list(Kernel))
def test_rect_integral_matches_midpoint_sum(kernel):
    n = 400
    u = 1.0 + (np.arange(n) + 0.5) / n
    v = 0.5 + (np.arange(n) + 0.5) / n
    w = u[:, None] + 1j * v[None, :]
    reference = kernel_value(kernel, w).sum() / n**2
    exact = rect_kernel_integral(kernel, 1.0, 2.0, 0.5, 1.5)
    assert abs(exact - reference) < 1e-5


@pytest.mark.parametrize("kernel", [Kernel.CAUCHY, Kernel.CONJ_CAUCHY, Kernel.RATIO])
def test_rect_integral_symmetric_cell_vanishes(kernel):
    assert abs(rect_kernel_integral(kernel, -1.0, 1.0, -1.0, 1.0)) < 1e-12


# =========================
# 2) 경계 적분
# =========================
def test_cauchy_integral_of_one(circle):
    ones = np.ones(circle.n_segments)
    assert cauchy_integral(circle, ones, 0.2 + 0.1j) == pytest.approx(1.0, abs=1e-12)
    assert cauchy_integral(circle, ones, 3.0) == pytest.approx(0.0, abs=1e-12)


def test_cauchy_integral_reproduces_linear_density(circle):
    z = np.array([0.3 - 0.2j, -0.5j])
    out = cauchy_integral(circle, circle.vertices, z)
    assert np.allclose(out, z, atol=1e-12)


def test_conj_cauchy_integral_of_one(circle):
    ones = np.ones(circle.n_segments)
    assert conj_cauchy_integral(circle, ones, 0.1j) == pytest.approx(-1.0, abs=1e-12)
    assert conj_cauchy_integral(circle, ones, -2.5) == pytest.approx(0.0, abs=1e-12)


def test_gauss_kernel_vanishes_by_symmetry(circle):
    ones = np.ones(circle.n_segments)
    for kernel in (Kernel.RATIO, Kernel.LOG_MODULUS):
        for measure in (Measure.DXI, Measure.DXI_BAR):
            out = contour_integral(circle, ContourIntegrand(kernel, ones, measure), 0.0)
            assert abs(out) < 1e-10


def test_contour_guard(circle):
    with pytest.raises(TooCloseToBoundaryError):
        cauchy_integral(circle, np.ones(circle.n_segments), 1.0)
    assert np.isfinite(cauchy_integral(circle, np.ones(circle.n_segments), 1.001, guard=False))


def test_density_length_mismatch(circle):
    with pytest.raises(BadDiscretizationError):
        cauchy_integral(circle, np.ones(10), 0.0)


# =========================
# 3) 영역 적분
# =========================
def test_area_rule_covers_polygon(circle, disk_rule):
    assert disk_rule.total_area == pytest.approx(circle.area, rel=1e-2)
    assert np.all(circle.inside_mask(disk_rule.centers))


def test_uniform_grid_rule(circle):
    rule = uniform_grid_rule(circle, 200)
    assert rule.total_area == pytest.approx(circle.area, rel=2e-2)
    with pytest.raises(ValueError):
        uniform_grid_rule(circle, 1)


def test_cauchy_area_potential_of_one(disk_rule):
    z_in = np.array([0.0, 0.3 + 0.2j, -0.4j])
    assert np.allclose(cauchy_area_potential(disk_rule, 1.0, z_in), np.conj(z_in), atol=5e-3)
    assert cauchy_area_potential(disk_rule, 1.0, 2.0) == pytest.approx(0.5, abs=5e-3)


def test_wirtinger_of_area_potential(disk_rule):
    assert wirtinger_of_area_potential(disk_rule, 1.0, 0.1 + 0.1j) == pytest.approx(1.0, abs=1e-3)
    value = wirtinger_of_area_potential(disk_rule, lambda xi: xi, 0.2 - 0.1j)
    assert value == pytest.approx(0.2 - 0.1j, abs=0.1)


def test_wirtinger_stencil_guard(disk_rule):
    with pytest.raises(StencilOutOfDomainError):
        wirtinger_of_area_potential(disk_rule, 1.0, 0.99)


def test_singular_density(disk_rule):
    with pytest.raises(SingularDensityError):
        cauchy_area_potential(disk_rule, lambda xi: np.full(xi.shape, np.nan), 0.0)
