"""
config.py
============================================================
전역 설정 (수치 파라미터 / 검증 허용오차)

설명:
- .env 파일(또는 환경변수)에서 값을 읽고, 없으면 기본값을 사용합니다.
- 모든 모듈은 `from config import NAME` 형태로 필요한 상수만 가져갑니다.
- 허용오차는 DEFAULT_TOLERANCES 하나에 모아두고, CLI의 `--tol NAME=VAL`로
  실행 단위에서 덮어쓸 수 있습니다.

Note:
- 여기 있는 값들은 수치 정책(quadrature 예산, FD 스텝 등)이지 물리 상수가 아닙니다.
"""

import os

from dotenv import load_dotenv

load_dotenv()


def _env_float(name: str, default: float) -> float:
    raw = os.getenv(name)
    return float(raw) if raw not in (None, "") else default


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    return int(raw) if raw not in (None, "") else default


# ============================================================
# 재현성
# ============================================================
DEFAULT_SEED = _env_int("LAME_SEED", 42)


# ============================================================
# 유한차분 (finite differences)
# ============================================================
# closed-form 필드용 상대 스텝 (h = FD_STEP_RELATIVE * length_scale)
FD_STEP_RELATIVE = _env_float("LAME_FD_STEP_RELATIVE", 1e-4)

# area potential(Teodorescu, Vekua)에 쓰는 스텝. 셀 크기보다 충분히 커야 함
AREA_FD_STEP = _env_float("LAME_AREA_FD_STEP", 2e-2)

# contour 기반 필드(Lamé-Cauchy transform)의 FD 스텝
CONTOUR_FD_STEP = _env_float("LAME_CONTOUR_FD_STEP", 1e-3)


# ============================================================
# Geometry
# ============================================================
MAX_KOCH_GENERATION = 8
MAX_DECOMPOSITION_DEPTH = 14
MIN_CIRCLE_SEGMENTS = 8

# contains()의 boundary 판정 밴드 (nominal_diameter 대비)
BOUNDARY_TOLERANCE_RELATIVE = _env_float("LAME_BOUNDARY_TOLERANCE", 1e-12)

# 사용자 polyline의 단순성(self-intersection) 검사 상한
SIMPLICITY_CHECK_MAX_SEGMENTS = _env_int("LAME_SIMPLICITY_MAX_SEGMENTS", 20000)


# ============================================================
# Quadrature
# ============================================================
# ratio / log 커널용 세그먼트당 Gauss-Legendre 노드 수
CONTOUR_GAUSS_NODES = _env_int("LAME_CONTOUR_GAUSS_NODES", 4)

# dist(z, γ) < GUARD * max_segment_length 이면 TooCloseToBoundary
CONTOUR_GUARD_FACTOR = _env_float("LAME_CONTOUR_GUARD_FACTOR", 3.0)

# Whitney square 하나를 몇 단계 더 쪼개서 area rule 셀로 쓸지
AREA_SUBDIVISION_LEVELS = _env_int("LAME_AREA_SUBDIVISION_LEVELS", 2)

# 경계 셀(미수용 최종 레벨 셀)을 k x k 로 샘플링해서 contains로 클리핑
BOUNDARY_CELL_SAMPLES = _env_int("LAME_BOUNDARY_CELL_SAMPLES", 4)

# 안쪽 셀 한 변 상한 = root_side / 2^(max_depth − offset). 깊이를 올리면 안쪽 셀도 작아짐
AREA_GRADING_OFFSET = _env_int("LAME_AREA_GRADING_OFFSET", 2)

# (셀 수) x (평가점 수) 블록 크기 상한
AREA_BLOCK_SIZE = _env_int("LAME_AREA_BLOCK_SIZE", 4_000_000)


# ============================================================
# Boundary limits
# ============================================================
# δ0 = factor * (로컬 세그먼트 길이)
BOUNDARY_DELTA_FACTOR = _env_float("LAME_BOUNDARY_DELTA_FACTOR", 16.0)
FRACTAL_BOUNDARY_DELTA_FACTOR = _env_float("LAME_FRACTAL_BOUNDARY_DELTA_FACTOR", 0.5)
BOUNDARY_LIMIT_TOL = _env_float("LAME_BOUNDARY_LIMIT_TOL", 1e-2)


# ============================================================
# Whitney jets / extension
# ============================================================
JET_ALL_PAIRS_MAX_VERTICES = _env_int("LAME_JET_ALL_PAIRS_MAX", 2000)
JET_RANDOM_PAIRS = _env_int("LAME_JET_RANDOM_PAIRS", 2_000_000)
JET_SCALING_SLOPE_TOL = _env_float("LAME_JET_SCALING_SLOPE_TOL", 0.2)

# bump 지지 반폭 (square side 단위). 0.75 => 한 변의 1/4 만큼 겹침
EXTENSION_BUMP_HALF_WIDTH = _env_float("LAME_EXTENSION_BUMP_HALF_WIDTH", 0.75)

# 배경 다항식 (z−c, conj(z−c) 의 총차수) 최소제곱 적합 차수
EXTENSION_BACKGROUND_DEGREE = _env_int("LAME_EXTENSION_BACKGROUND_DEGREE", 3)

# collar 꼭짓점 가우시안 폭 σ_k = (이웃 꼭짓점까지 거리) / ratio, 후보 꼭짓점 수
EXTENSION_COLLAR_SIGMA_RATIO = _env_float("LAME_EXTENSION_COLLAR_SIGMA_RATIO", 6.0)
EXTENSION_COLLAR_NEIGHBORS = _env_int("LAME_EXTENSION_COLLAR_NEIGHBORS", 8)

# extension 분할 깊이 = decomposition 깊이 + offset
EXTENSION_DEPTH_OFFSET = _env_int("LAME_EXTENSION_DEPTH_OFFSET", 2)
DEFAULT_EXTENSION_DEPTH = _env_int("LAME_EXTENSION_DEPTH", 10)


# ============================================================
# 검증 허용오차 (verify suites / solve 리포트)
# ============================================================
DEFAULT_TOLERANCES = {
    "identity": 1e-12,
    "kernel_exact": 1e-12,
    "kernel_fd": 1e-6,
    "fd_rate_low": 3.2,
    "fd_rate_high": 4.8,
    "right_inverse": 5e-2,
    "depth_improvement": 2.0,
    "borel_pompeiu": 1e-2,
    "cauchy_repr": 1e-3,
    "closed_form_transform": 1e-4,
    "jump_f0": 1e-2,
    "jump_f1": 5e-2,
    "method_agreement": 1e-2,
    "lame_residual": 5e-2,
    "growth_ratio_factor": 2.0,
    "growth_dz": 1e-2,
    "box_dimension": 5e-2,
    "lp_stability": 0.1,
    "extension_blowup_factor": 10.0,
    "fractal_jump": 5e-2,
}
