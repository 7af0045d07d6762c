"""
test_whitney.py
============================================================
Whitney jet, 호환성 검사, C^{1,ν} 확장, L^p 추정 테스트

테스트 내용:
1. jet 생성 (필드 trace, 상수 jet) 과 CSV 입출력
2. check_jet: 유효한 jet / lip_constant 초과 / 스케일링 위반
3. 확장: 꼭짓점 trace, 1차 jet 재현, 분할의 합, 정사각형 경계와 collar 에서의 미분 연속성
   배경 다항식 적합, 2차 jet 확장의 Ω 안 L f̃ = 2α
4. L^p 지수와 인증 조건

실행:
    pytest test/test_whitney.py
"""

import numpy as np
import pytest

from elasticity.fields import ClosedFormField, exp_field, power_field
from elasticity.params import make_params
from errors import BadDiscretizationError, JetInvalidError, MissingDerivativeError
from geometry.decomposition import whitney_decompose
from geometry.generators import make_circle
from whitney.background import fit_background
from whitney.extension import extend, partition_of_unity_sum
from whitney.jet import WhitneyJet, check_jet, constant_jet, jet_from_field
from whitney.lp import certificate_available, lp_exponent, lp_norm_estimate

NU = 0.9


def _linear_field():
    return ClosedFormField(
        value=lambda z: z + 2.0 * np.conj(z),
        dz=lambda z: np.ones_like(z),
        dzbar=lambda z: 2.0 * np.ones_like(z),
        name="z + 2 conj(z)",
    )


@pytest.fixture(scope="module")
def params():
    return make_params(1.0, 1.0)


@pytest.fixture(scope="module")
def circle():
    return make_circle(n_segments=64)


@pytest.fixture(scope="module")
def linear_extension(circle):
    return extend(jet_from_field(_linear_field(), circle, NU), depth=6)


# =========================
# 1) jet 생성 / CSV
# =========================
def test_jet_from_field(circle):
    jet = jet_from_field(power_field(2), circle, NU)
    t = circle.vertices
    assert np.allclose(jet.f0, t**2)
    assert np.allclose(jet.f1, 2 * t)
    assert np.allclose(jet.f2, 0.0)
    assert not jet.is_zero()


def test_jet_needs_derivatives(circle):
    with pytest.raises(MissingDerivativeError):
        jet_from_field(ClosedFormField(value=lambda z: z, name="bare"), circle, NU)


def test_constant_and_zero_jet(circle):
    jet = constant_jet(circle, 2.5, NU)
    assert np.all(jet.f0 == 2.5)
    assert constant_jet(circle, 0.0, NU).is_zero()


@pytest.mark.parametrize("nu", [0.0, 1.0, -0.2])
def test_nu_range(circle, nu):
    with pytest.raises(ValueError):
        constant_jet(circle, 1.0, nu)


def test_jet_csv(tmp_path, circle):
    jet = jet_from_field(power_field(2), circle, NU)
    path = tmp_path / "jet.csv"
    jet.to_csv(path)
    loaded = WhitneyJet.from_csv(path, nu=NU)
    assert np.allclose(loaded.curve.vertices, circle.vertices)
    assert np.allclose(loaded.f1, jet.f1)


def test_jet_csv_reversed_orientation(tmp_path, circle):
    jet = jet_from_field(power_field(2), circle, NU)
    path = tmp_path / "jet.csv"
    jet.to_csv(path)
    lines = path.read_text(encoding="utf-8").splitlines()
    path.write_text("\n".join([lines[0]] + lines[1:][::-1]) + "\n", encoding="utf-8")
    loaded = WhitneyJet.from_csv(path, nu=NU)
    assert loaded.curve.signed_area > 0
    assert np.allclose(loaded.f0, loaded.curve.vertices**2)


def test_jet_csv_bad_header(tmp_path):
    path = tmp_path / "jet.csv"
    path.write_text("x,y,f0\n0,0,1\n", encoding="utf-8")
    with pytest.raises(BadDiscretizationError):
        WhitneyJet.from_csv(path, nu=NU)


# =========================
# 2) 호환성 검사
# =========================
def test_check_jet_valid(circle):
    report = check_jet(jet_from_field(power_field(2), circle, NU))
    assert report.valid
    assert not report.sampled
    assert report.n_pairs == 64 * 63
    assert 0.0 < report.c_min < 10.0


def test_check_jet_lip_constant_exceeded(circle):
    jet = jet_from_field(power_field(2), circle, NU, lip_constant=1e-6)
    report = check_jet(jet)
    assert not report.valid
    assert "lip_constant" in report.reason


def test_check_jet_inconsistent_derivative(circle):
    jet = WhitneyJet(circle, circle.vertices, 0.0, 0.0, NU)
    report = check_jet(jet)
    assert not report.valid
    assert report.scaling_slope < -0.5
    with pytest.raises(JetInvalidError):
        extend(jet, depth=4)


# =========================
# 3) 확장
# =========================
def test_extension_trace_at_vertices(circle):
    jet = jet_from_field(power_field(2), circle, NU)
    ext = extend(jet, depth=6)
    values = ext.evaluate_all(circle.vertices)
    assert np.allclose(values.value, jet.f0, atol=1e-12)
    assert np.allclose(values.dz, jet.f1, atol=1e-12)
    assert np.allclose(values.dzbar, jet.f2, atol=1e-12)


def test_extension_reproduces_linear_jet(linear_extension):
    z = np.array([0.0, 0.3j, -0.5 + 0.2j, 1.2, -1.1j])
    values = linear_extension.evaluate_all(z)
    assert np.allclose(values.value, z + 2.0 * np.conj(z), atol=1e-10)
    assert np.allclose(values.dz, 1.0, atol=1e-10)
    assert np.allclose(values.dzbar, 2.0, atol=1e-10)
    for second in (values.dz_dz, values.dz_dzbar, values.dzbar_dzbar):
        assert np.max(np.abs(second)) < 1e-8


def test_extension_has_compact_support(linear_extension):
    far = 2.5 * np.exp(1j * np.linspace(0.0, 2.0 * np.pi, 8, endpoint=False))
    assert np.max(np.abs(linear_extension(far))) < 1e-12


def test_partition_of_unity_on_covered_points(circle, linear_extension):
    # dist(z, γ) ≥ 3·(가장 작은 정사각형 변) 이면 z 는 받아들인 정사각형 안에 있음
    rng = np.random.default_rng(0)
    margin = 3.0 * linear_extension.decomposition.boundary_side
    r = np.concatenate([rng.uniform(1.0 + margin, 1.45, 500), rng.uniform(0.3, 0.99 - margin, 500)])
    z = r * np.exp(2j * np.pi * rng.uniform(0.0, 1.0, r.size))
    assert np.all(circle.distance(z) > margin)
    phi_sum = partition_of_unity_sum(linear_extension, z)
    assert np.max(np.abs(phi_sum - 1.0)) < 1e-12
    _, collar = linear_extension.partition_of_unity(z)
    assert np.all(collar == 0.0)


def test_partition_of_unity_vanishes_on_curve(circle, linear_extension):
    phi_sum, collar = linear_extension.partition_of_unity(circle.vertices)
    assert np.all(phi_sum == 0.0)
    assert np.allclose(collar, 1.0)
    near = circle.midpoints + 0.3 * linear_extension.decomposition.boundary_side * circle.inward_normals
    phi_near, collar_near = linear_extension.partition_of_unity(near)
    assert np.allclose(phi_near + collar_near, 1.0, atol=1e-12)


def _fd_wirtinger(f, z, h):
    fx = (f(z + h) - f(z - h)) / (2.0 * h)
    fy = (f(z + 1j * h) - f(z - 1j * h)) / (2.0 * h)
    return 0.5 * (fx - 1j * fy), 0.5 * (fx + 1j * fy)


def test_extension_gradient_is_continuous(circle):
    # 배경 다항식으로 다 설명되지 않는 jet: 잔차 blend 와 collar 분기가 실제로 쓰임
    ext = extend(jet_from_field(exp_field(), circle, NU), depth=6, check=False)
    assert np.max(np.abs(ext.residual_jet[0])) > 1e-6

    decomp = ext.decomposition
    small = decomp.sides <= 4.0 * decomp.boundary_side
    c, s = decomp.centers[small][::7], decomp.sides[small][::7]
    edges = np.concatenate([c + 0.5 * s, c + 0.5j * s, c + 0.5 * (1 + 1j) * s])
    step = decomp.boundary_side
    collar = np.concatenate([circle.midpoints + t * step * circle.inward_normals for t in (-0.6, -0.2, 0.2, 0.6)])
    z = np.concatenate([edges, collar])

    values = ext.evaluate_all(z)
    dz_fd, dzbar_fd = _fd_wirtinger(ext.evaluate, z, 1e-6)
    assert np.max(np.abs(values.dz - dz_fd)) < 1e-5
    assert np.max(np.abs(values.dzbar - dzbar_fd)) < 1e-5


def test_background_reproduces_quadratic_jet(circle):
    jet = jet_from_field(power_field(2), circle, NU)
    background = fit_background(jet)
    z = np.array([0.0, 0.4 - 0.3j, 1.7j])
    assert np.allclose(background(z), z**2, atol=1e-12)
    values = background.evaluate_all(z)
    assert np.allclose(values.dz_dz, 2.0, atol=1e-10)
    assert np.allclose(values.dz_dzbar, 0.0, atol=1e-10)


def test_quadratic_extension_is_polynomial_inside(params, circle):
    ext = extend(jet_from_field(power_field(2), circle, NU), depth=6)
    rng = np.random.default_rng(1)
    z = 0.9 * np.sqrt(rng.uniform(0.0, 1.0, 200)) * np.exp(2j * np.pi * rng.uniform(0.0, 1.0, 200))
    values = ext.evaluate_all(z)
    assert np.allclose(values.value, z**2, atol=1e-10)
    lf = params.alpha * np.conj(values.dz_dz) + params.beta * values.dz_dzbar
    assert np.allclose(lf, 2.0 * params.alpha, atol=1e-8)


def test_extension_as_field(linear_extension):
    field = linear_extension.as_field()
    assert field.has_first
    assert field(0.25) == pytest.approx(0.75)


# =========================
# 4) L^p
# =========================
def test_lp_exponent():
    assert lp_exponent(1.5, 0.9) == pytest.approx(5.0)
    assert lp_exponent(np.log(4) / np.log(3), 0.9) > 2.0
    with pytest.raises(ValueError):
        lp_exponent(1.0, 0.5)
    with pytest.raises(ValueError):
        lp_exponent(1.5, 1.0)


def test_certificate_condition():
    assert certificate_available(np.log(4) / np.log(3), 0.9)
    assert not certificate_available(1.5, 0.7)
    assert lp_exponent(1.5, 0.7) < 2.0


def test_lp_norm_of_linear_extension(circle, linear_extension):
    estimate = lp_norm_estimate(linear_extension, whitney_decompose(circle, 5), 5.0)
    assert estimate.p == 5.0
    assert estimate.total < 1e-20
    with pytest.raises(ValueError):
        lp_norm_estimate(linear_extension, whitney_decompose(make_circle(n_segments=32), 3), 5.0)
