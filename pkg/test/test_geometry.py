"""
test_geometry.py
============================================================
곡선, 생성기, box-counting, Whitney 분해 테스트

테스트 내용:
1. Curve 생성 규칙 (방향 뒤집기, 잘못된 이산화)
2. 거리 / 포함 판정
3. 원 / Koch snowflake 생성기
4. box-counting 차원
5. Whitney 분해 성질과 d-sum

실행:
    pytest test/test_geometry.py
"""

import numpy as np
import pytest

from errors import BadDiscretizationError, DepthTooLargeError
from geometry.boxcount import box_count, box_dimension, d_summability_integral
from geometry.curve import Curve, Location
from geometry.decomposition import d_sum, d_sum_levels, level_growth_exponent, whitney_decompose
from geometry.generators import make_circle, make_koch_snowflake

SQUARE = [0, 1, 1 + 1j, 1j]


@pytest.fixture(scope="module")
def disk_decomposition():
    return whitney_decompose(make_circle(n_segments=256), 7)


# =========================
# 1) Curve 생성
# =========================
def test_from_points_reverses_clockwise():
    curve = Curve.from_points(SQUARE[::-1])
    assert curve.signed_area == pytest.approx(1.0)
    assert curve.perimeter == pytest.approx(4.0)


def test_from_points_accepts_xy_and_closing_vertex():
    curve = Curve.from_points(np.array([[0, 0], [1, 0], [1, 1], [0, 1], [0, 0]], dtype=float))
    assert curve.n_segments == 4
    assert curve.centroid == pytest.approx(0.5 + 0.5j)


def test_constructor_rejects_clockwise():
    with pytest.raises(BadDiscretizationError):
        Curve(np.array(SQUARE[::-1], dtype=complex))


@pytest.mark.parametrize("points", [
    [0, 1],
    [0, 1, 1, 1j],
    [0, 1 + 1j, 1, 1j],
    [0, 1, np.nan],
])
def test_bad_discretization(points):
    with pytest.raises(BadDiscretizationError):
        Curve.from_points(points)


def test_csv_round_trip(tmp_path):
    curve = make_circle(n_segments=32)
    path = tmp_path / "curve.csv"
    curve.to_csv(path)
    assert path.read_text(encoding="utf-8").splitlines()[0] == "x,y"
    loaded = Curve.from_csv(path)
    assert np.allclose(loaded.vertices, curve.vertices)


def test_csv_bad_header(tmp_path):
    path = tmp_path / "curve.csv"
    path.write_text("a,b\n0,0\n1,0\n0,1\n", encoding="utf-8")
    with pytest.raises(BadDiscretizationError):
        Curve.from_csv(path)


# =========================
# 2) 거리 / 포함
# =========================
def test_distance_to_regular_polygon():
    n = 64
    curve = make_circle(n_segments=n)
    assert curve.distance(0.0) == pytest.approx(np.cos(np.pi / n))
    assert curve.distance(3.0) == pytest.approx(2.0)


def test_contains():
    curve = make_circle(n_segments=64)
    assert curve.contains(0.0) is Location.INSIDE
    assert curve.contains(2.0) is Location.OUTSIDE
    assert curve.contains(1.0) is Location.BOUNDARY
    codes = curve.locate(np.array([0.0, 2.0]))
    assert list(codes) == [1, -1]


def test_inward_normals_point_inside():
    curve = make_circle(n_segments=64)
    probes = curve.midpoints + 1e-3 * curve.inward_normals
    assert np.all(curve.inside_mask(probes))


# =========================
# 3) 생성기
# =========================
def test_circle_area_and_perimeter():
    n = 128
    curve = make_circle(radius=2.0, n_segments=n)
    assert curve.area == pytest.approx(0.5 * n * 4.0 * np.sin(2 * np.pi / n))
    assert curve.perimeter == pytest.approx(n * 4.0 * np.sin(np.pi / n))


def test_circle_needs_enough_segments():
    with pytest.raises(BadDiscretizationError):
        make_circle(n_segments=4)
    with pytest.raises(BadDiscretizationError):
        make_circle(radius=0.0)


@pytest.mark.parametrize("generation", [0, 1, 3])
def test_koch_segment_count_and_perimeter(generation):
    curve = make_koch_snowflake(generation)
    assert curve.n_segments == 3 * 4**generation
    assert curve.perimeter == pytest.approx(3.0 * (4.0 / 3.0) ** generation)
    assert curve.generation == generation


def test_koch_first_generation_area():
    curve = make_koch_snowflake(1)
    assert curve.area == pytest.approx(np.sqrt(3.0) / 3.0)
    ok, _ = curve.check_simple
    assert ok


def test_koch_generation_limit():
    with pytest.raises(DepthTooLargeError):
        make_koch_snowflake(9)
    with pytest.raises(BadDiscretizationError):
        make_koch_snowflake(-1)


# =========================
# 4) box-counting
# =========================
def test_box_count_monotone():
    curve = make_circle(n_segments=256)
    assert box_count(curve, 0.05) >= box_count(curve, 0.2)


def test_box_dimension_circle():
    assert box_dimension(make_circle(n_segments=1024)) == pytest.approx(1.0, abs=0.1)


@pytest.mark.slow
def test_box_dimension_koch():
    assert box_dimension(make_koch_snowflake(6)) == pytest.approx(np.log(4) / np.log(3), abs=0.05)


def test_d_summability_integral_bad_arguments():
    curve = make_circle(n_segments=64)
    with pytest.raises(ValueError):
        d_summability_integral(curve, 0.9, 0.01)
    with pytest.raises(ValueError):
        d_summability_integral(curve, 1.5, 2.0)


# =========================
# 5) Whitney 분해
# =========================
def test_whitney_ratios(disk_decomposition):
    ratios = disk_decomposition.whitney_ratios()
    assert ratios.size > 0
    assert np.all(ratios >= 1.0 - 1e-12)
    assert np.all(ratios < 4.0)


def test_squares_inside_and_area(disk_decomposition):
    decomp = disk_decomposition
    assert np.all(decomp.inside)
    assert np.all(decomp.curve.inside_mask(decomp.centers))
    assert decomp.covered_area < decomp.curve.area
    assert decomp.covered_area + decomp.uncovered_area == pytest.approx(decomp.curve.area)


def test_uncovered_area_shrinks():
    curve = make_circle(n_segments=256)
    coarse = whitney_decompose(curve, 5)
    fine = whitney_decompose(curve, 7)
    assert fine.uncovered_area < coarse.uncovered_area


def test_level_counts_and_growth(disk_decomposition):
    counts = disk_decomposition.level_counts()
    assert counts.sum() == disk_decomposition.n_squares
    assert level_growth_exponent(disk_decomposition) == pytest.approx(1.0, abs=0.25)


def test_d_sum_levels_add_up(disk_decomposition):
    assert d_sum_levels(disk_decomposition, 1.5).sum() == pytest.approx(d_sum(disk_decomposition, 1.5))
    with pytest.raises(ValueError):
        d_sum(disk_decomposition, 1.0)


def test_complement_region_covers_exterior():
    curve = make_circle(n_segments=128)
    decomp = whitney_decompose(curve, 5, region="complement")
    assert np.any(~decomp.inside)
    assert np.any(decomp.inside)


def test_depth_limit():
    with pytest.raises(DepthTooLargeError):
        whitney_decompose(make_circle(n_segments=64), 15)


def test_decomposition_csv(tmp_path, disk_decomposition):
    path = tmp_path / "decomposition.csv"
    disk_decomposition.to_csv(path)
    lines = path.read_text(encoding="utf-8").splitlines()
    assert len(lines) == disk_decomposition.n_squares + 1
