"""
test_operators.py
============================================================
Teodorescu 연산자, 표현 공식, Lamé-Cauchy transform, 경계 극한, jump 문제 테스트

테스트 내용:
1. T[1](0) = β*, 0 밀도, 오른쪽 역원 (Ω 안 / 밖), 깊이에 따른 잔차 감소
2. Cauchy 표현식과 Borel-Pompeiu 공식 (단위 원판)
3. C^L{1,0,0} 닫힌 형태, 선형 jet 재현
4. 한쪽 극한 Richardson 외삽, 수렴 실패
5. jump 문제 풀이기 2종, 방법 간 일치 (1차 / 2차 jet), L F 잔차
6. 무한대 근처 성장 검사

실행:
    pytest test/test_operators.py
"""

import numpy as np
import pytest

from elasticity.fields import ClosedFormField, conj_power_field, constant_field, modulus_square_field, power_field
from elasticity.operator import first_wirtinger_fd
from elasticity.params import make_params
from errors import CertificateUnavailableWarning, JetInvalidError, MissingDerivativeError, NonConvergentError
from geometry.decomposition import whitney_decompose
from geometry.generators import make_circle
from operators.boundary import boundary_jump, boundary_limit, derivative_jump, midpoint_values, probe_segments
from operators.growth import asymptotic_growth_check
from operators.jump_problem import (
    SOLVERS,
    FieldOnGrid,
    anchored_difference,
    grid_points,
    lame_residual,
    method_agreement,
    solve_jump_problem,
)
from operators.lame_cauchy import lame_cauchy_transform, lame_cauchy_transform_dz
from operators.representation import borel_pompeiu_rhs, cauchy_repr
from operators.teodorescu import teodorescu, teodorescu_dz, verify_right_inverse
from quadrature.area import build_area_rule
from whitney.jet import WhitneyJet, constant_jet, jet_from_field

NU = 0.9


@pytest.fixture(scope="module")
def params():
    return make_params(1.0, 1.0)


@pytest.fixture(scope="module")
def disk():
    return make_circle(n_segments=256)


@pytest.fixture(scope="module")
def fine_disk():
    return make_circle(n_segments=1024)


@pytest.fixture(scope="module")
def disk_rule(disk):
    return build_area_rule(whitney_decompose(disk, 7), subdivision_levels=3)


# =========================
# 1) Teodorescu 연산자
# =========================
def test_teodorescu_of_one_at_center(params, disk_rule):
    assert teodorescu(params, disk_rule, 1.0, 0.0) == pytest.approx(params.beta_star, abs=2e-3)


def test_teodorescu_zero_density(params, disk_rule):
    out = teodorescu(params, disk_rule, 0.0, np.array([0.1, 2.0]))
    assert np.all(out == 0)


def test_teodorescu_dz_matches_finite_difference(params, disk_rule):
    z = 0.3 - 0.2j
    fd = first_wirtinger_fd(lambda w: teodorescu(params, disk_rule, 1.0, w), z, h=1e-3)[0]
    assert teodorescu_dz(params, disk_rule, 1.0, z) == pytest.approx(fd, abs=1e-2)


def test_right_inverse(params, disk_rule):
    g_one = lambda z: np.ones_like(np.asarray(z, dtype=complex))  # noqa: E731
    assert verify_right_inverse(params, disk_rule, g_one, 0.2 + 0.1j) < 5e-2
    assert verify_right_inverse(params, disk_rule, g_one, 4.0) < 5e-2


def test_right_inverse_improves_with_depth(params, disk):
    # 안쪽 셀 한 변 상한이 깊이를 따라가므로 깊이 6 → 8 에서 안쪽 셀이 4배 작아짐
    probes = np.array([0.2 + 0.1j, -0.35 + 0.2j, 0.1 - 0.45j, -0.2 - 0.15j])
    g = lambda z: np.asarray(z, dtype=complex)  # noqa: E731
    mean, largest_inner = {}, {}
    for depth in (6, 8):
        rule = build_area_rule(whitney_decompose(disk, depth), subdivision_levels=1)
        near = np.abs(rule.centers) < 0.5
        largest_inner[depth] = float(rule.sides[near].max())
        mean[depth] = float(np.mean(verify_right_inverse(params, rule, g, probes)))
    assert largest_inner[6] / largest_inner[8] == pytest.approx(4.0)
    assert mean[6] / mean[8] >= 2.0


# =========================
# 2) 표현 공식
# =========================
def test_cauchy_repr_constant(params, disk):
    z = np.array([0.0, 0.4j, 3.0])
    out = cauchy_repr(params, disk, constant_field(2.0 - 1.0j), z)
    assert np.allclose(out, [2.0 - 1.0j, 2.0 - 1.0j, 0.0], atol=1e-12)


def test_cauchy_repr_tuple_boundary(params, disk):
    out = cauchy_repr(params, disk, (disk.vertices, 1.0, 0.0), 0.3 + 0.1j)
    assert out == pytest.approx(0.3 + 0.1j, abs=1e-8)


def test_cauchy_repr_antiholomorphic(params, fine_disk):
    z = np.array([0.2, -0.3 + 0.4j])
    f = conj_power_field(2)
    assert np.max(np.abs(cauchy_repr(params, fine_disk, f, z) - f(z))) < 1e-3


def test_borel_pompeiu_modulus_square(params, fine_disk):
    rule = build_area_rule(whitney_decompose(fine_disk, 7))
    f = modulus_square_field()
    z = np.array([0.0, 0.3 + 0.3j])
    assert np.max(np.abs(borel_pompeiu_rhs(params, fine_disk, f, rule, z) - f(z))) < 1e-2
    assert abs(borel_pompeiu_rhs(params, fine_disk, f, rule, 2.0)) < 1e-2


def test_borel_pompeiu_needs_derivatives(params, disk, disk_rule):
    bare = ClosedFormField(value=lambda z: np.ones_like(z), name="bare")
    with pytest.raises(MissingDerivativeError):
        borel_pompeiu_rhs(params, disk, bare, disk_rule, 0.0)


# =========================
# 3) Lamé-Cauchy transform
# =========================
def test_transform_of_constant_jet(params, disk):
    jet = constant_jet(disk, 1.0, NU)
    assert lame_cauchy_transform(params, jet, 0.0) == pytest.approx(1.0, abs=1e-12)
    assert lame_cauchy_transform(params, jet, 3.0) == pytest.approx(0.0, abs=1e-12)
    assert lame_cauchy_transform_dz(params, jet, 0.0) == 0


def test_transform_of_linear_jet(params, disk):
    jet = jet_from_field(power_field(1), disk, NU)
    z_in = np.array([0.1 + 0.2j, -0.5j])
    assert np.allclose(lame_cauchy_transform(params, jet, z_in), z_in, atol=1e-8)
    assert abs(lame_cauchy_transform(params, jet, 2.0 + 1.0j)) < 1e-8
    assert np.allclose(lame_cauchy_transform_dz(params, jet, z_in), 1.0, atol=1e-8)


def test_transform_of_zero_jet(params, disk):
    jet = constant_jet(disk, 0.0, NU)
    assert np.all(lame_cauchy_transform(params, jet, np.array([0.0, 5.0])) == 0)


# =========================
# 4) 경계 극한
# =========================
def test_probe_segments(disk):
    idx = probe_segments(disk, 8)
    assert list(idx) == [32 * k for k in range(8)]
    assert probe_segments(disk, 10_000).size == disk.n_segments


def test_boundary_limit_of_polynomial(disk):
    segments = probe_segments(disk, 4)
    t = disk.midpoints[segments]
    for side in ("plus", "minus"):
        out = boundary_limit(lambda w: w**2, disk, segments, side, delta0=0.05)
        assert np.allclose(out, t**2, atol=1e-12)
    assert np.allclose(boundary_jump(lambda w: w**2, disk, segments, delta0=0.05), 0.0, atol=1e-12)


def test_boundary_limit_non_convergent(disk):
    with pytest.raises(NonConvergentError):
        boundary_limit(lambda w: 1.0 / np.asarray(disk.distance(w)), disk, [0], "plus", delta0=0.05)


def test_boundary_limit_bad_arguments(disk):
    with pytest.raises(ValueError):
        boundary_limit(lambda w: w, disk, [0], "left")
    with pytest.raises(IndexError):
        boundary_limit(lambda w: w, disk, [disk.n_segments], "plus")


def test_midpoint_values(disk):
    out = midpoint_values(disk.vertices, [0, 1], disk)
    assert np.allclose(out, disk.midpoints[[0, 1]])


def test_derivative_jump_options(params, disk):
    zero = constant_jet(disk, 0.0, NU)
    assert np.all(derivative_jump(params, zero, [0, 1]) == 0)
    with pytest.raises(ValueError):
        derivative_jump(params, jet_from_field(power_field(1), disk, NU), [0], method="spline")


# =========================
# 5) jump 문제
# =========================
def test_jump_of_constant_jet(params, fine_disk):
    sol = solve_jump_problem(params, constant_jet(fine_disk, 1.0, NU))
    r0, r1 = sol.jump_residuals(probe_segments(fine_disk, 4))
    assert r0 < 1e-2
    assert r1 < 5e-2


def test_derivative_jump_of_linear_jet(params, fine_disk):
    jet = jet_from_field(power_field(1), fine_disk, NU)
    out = derivative_jump(params, jet, probe_segments(fine_disk, 4))
    assert np.allclose(out, 1.0, atol=5e-2)


def test_solver_registry_and_errors(params, disk):
    assert set(SOLVERS) == {"cauchy_transform", "whitney_teodorescu"}
    with pytest.raises(ValueError):
        solve_jump_problem(params, constant_jet(disk, 1.0, NU), method="spectral")
    with pytest.raises(JetInvalidError):
        solve_jump_problem(params, WhitneyJet(disk, disk.vertices, 0.0, 0.0, NU))


def test_methods_agree_on_linear_jet(params, disk):
    jet = jet_from_field(power_field(1), disk, NU)
    a = solve_jump_problem(params, jet, "cauchy_transform")
    b = solve_jump_problem(params, jet, "whitney_teodorescu", depth=6, d=1.3)
    probes = np.array([0.0, 0.3j, -0.4 + 0.1j, 0.5 - 0.2j])
    assert method_agreement(a, b, probes) < 1e-8
    assert np.allclose(anchored_difference(a, a, probes), 0.0)
    assert b.certificate["available"]
    assert b.certificate["p"] == pytest.approx((2.0 - 1.3) / (1.0 - NU))


@pytest.fixture(scope="module")
def quadratic_solutions(params, disk):
    jet = jet_from_field(power_field(2), disk, NU)
    transform = solve_jump_problem(params, jet, "cauchy_transform")
    whitney = solve_jump_problem(params, jet, "whitney_teodorescu", check=False, depth=7, d=1.3)
    return transform, whitney


def test_methods_agree_on_quadratic_jet(quadratic_solutions):
    transform, whitney = quadratic_solutions
    rng = np.random.default_rng(3)
    points = 0.6 * np.sqrt(rng.uniform(0.0, 1.0, 20)) * np.exp(2j * np.pi * rng.uniform(0.0, 1.0, 20))
    assert method_agreement(transform, whitney, points) < 1e-2


def test_quadratic_jet_value_at_center(params, quadratic_solutions):
    # L z² = 2α 이므로 F(0) = −T[2α](0) = −2α β*
    expected = -2.0 * params.alpha * params.beta_star
    assert expected == pytest.approx(4.0 / 3.0)
    for sol in quadratic_solutions:
        assert sol(0.0) == pytest.approx(expected, abs=5e-3)


def test_whitney_solution_satisfies_lame_system_inside(quadratic_solutions):
    _, whitney = quadratic_solutions
    residual = lame_residual(whitney, np.array([0.0, 0.3, 0.5j]))
    assert residual.max() < 5e-2


def test_certificate_warning(params, disk):
    jet = constant_jet(disk, 1.0, 0.55)
    with pytest.warns(CertificateUnavailableWarning):
        sol = solve_jump_problem(params, jet, "whitney_teodorescu", depth=5, d=1.3)
    assert not sol.certificate["available"]


def test_lame_residual_of_transform(params, disk):
    sol = solve_jump_problem(params, jet_from_field(power_field(2), disk, NU))
    residual = lame_residual(sol, np.array([0.2 + 0.1j, -0.3j, 2.0, -1.5 + 0.5j]))
    assert residual.max() < 5e-2


def test_sample_and_metadata(tmp_path, params, disk):
    sol = solve_jump_problem(params, constant_jet(disk, 1.0, NU))
    grid = sol.sample(grid_points(disk, 9, 9))
    assert 0 < grid.n_points <= 81
    inside = grid.region == "inside"
    assert np.allclose(grid.values[inside], 1.0)
    assert np.allclose(grid.values[~inside], 0.0, atol=1e-12)

    path = tmp_path / "solution.csv"
    grid.to_csv(path)
    lines = path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "x,y,region,re,im"
    assert len(lines) == grid.n_points + 1

    meta = sol.metadata(probe_residuals={"jump_f0": 0.0})
    assert meta.method == "cauchy_transform"
    assert meta.params["lambda"] == 1.0


def test_field_on_grid_rejects_boundary_tag():
    with pytest.raises(ValueError):
        FieldOnGrid(np.array([0j]), np.array(["boundary"]), np.array([0j]), "jump_solution")


# =========================
# 6) 성장 검사
# =========================
def test_growth_of_quadratic_jet(params, disk):
    sol = solve_jump_problem(params, jet_from_field(power_field(2), disk, NU))
    report = asymptotic_growth_check(sol)
    assert report.radii == [10.0, 100.0, 1000.0]
    assert report.bounded
    assert report.decaying
    assert report.dz_max[-1] < report.dz_max[0]


def test_growth_of_zero_jet(params, disk):
    sol = solve_jump_problem(params, constant_jet(disk, 0.0, NU))
    report = asymptotic_growth_check(sol)
    assert max(report.ratios) == 0.0
    assert report.bounded


@pytest.mark.parametrize("radii", [(100.0, 10.0), (0.5, 10.0), ()])
def test_growth_bad_radii(params, disk, radii):
    sol = solve_jump_problem(params, constant_jet(disk, 1.0, NU))
    with pytest.raises(ValueError):
        asymptotic_growth_check(sol, radii)
