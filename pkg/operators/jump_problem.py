"""
operators/jump_problem.py
============================================================
Lamé-Navier jump 문제 풀이

    L_{α,β} F = 0 (Ω₊ ∪ Ω₋),  F⁺ − F⁻ = f0,  [∂z F]⁺ − [∂z F]⁻ = f1 (γ 위)

설명:
- cauchy_transform: F = C^L f. 매끈한 곡선용 (contour guard 적용).
- whitney_teodorescu: F = χ_Ω f̃ − T_Ω^L[L_{α,β} f̃]. fractal 경계에서도 동작.
  ν ≤ d/2 이면 L^p(p>2) 인증이 없으므로 CertificateUnavailableWarning 만 내고 계속합니다.
- 해는 상수 차이를 빼면 유일하므로, 두 방법 비교는 기준 프로브 값을 뺀
  anchored difference 의 표준편차로 합니다.

특징:
- BaseJumpSolver (ABC) + 구현 두 개 + SOLVERS 레지스트리
- FieldOnGrid: 격자 샘플 (CSV x,y,region,re,im). 경계 밴드 안의 점은 싣지 않음
"""

from __future__ import annotations

import csv
import logging
import warnings
from abc import ABC, abstractmethod
from dataclasses import dataclass, field as dc_field
from pathlib import Path
from typing import Callable, Dict, Literal, Optional, Type

import numpy as np

from config import (
    AREA_FD_STEP,
    AREA_SUBDIVISION_LEVELS,
    BOUNDARY_CELL_SAMPLES,
    BOUNDARY_DELTA_FACTOR,
    CONTOUR_FD_STEP,
    CONTOUR_GUARD_FACTOR,
    EXTENSION_DEPTH_OFFSET,
    FRACTAL_BOUNDARY_DELTA_FACTOR,
)
from elasticity.operator import apply_lame_operator_fd
from elasticity.params import LameParams
from errors import CertificateUnavailableWarning, JetInvalidError
from geometry.boxcount import box_dimension
from geometry.curve import Curve
from geometry.decomposition import whitney_decompose
from operators.boundary import Segments, boundary_jump, midpoint_values
from operators.lame_cauchy import lame_cauchy_transform, lame_cauchy_transform_dz
from operators.teodorescu import teodorescu, teodorescu_dz
from quadrature.area import AreaRule, build_area_rule
from schemas.reports import JetReport, SolutionMetadata
from whitney.extension import Extension, extend
from whitney.jet import WhitneyJet, check_jet
from whitney.lp import certificate_available, lp_exponent

logger = logging.getLogger(__name__)

Method = Literal["cauchy_transform", "whitney_teodorescu"]
Provenance = Literal["teodorescu", "borel_pompeiu", "cauchy_repr", "lame_cauchy", "jump_solution"]

FIELD_CSV_HEADER = ["x", "y", "region", "re", "im"]


# ============================================================
# 격자 샘플
# ============================================================
@dataclass
class FieldOnGrid:
    """
    격자 위 필드 값.

    Note:
        - region 은 "inside" / "outside" 만 갖습니다. 경계 밴드의 점은 만들 때 제외합니다.
    """
    points: np.ndarray
    region: np.ndarray
    values: np.ndarray
    provenance: Provenance

    def __post_init__(self):
        bad = ~np.isin(self.region, ("inside", "outside"))
        if np.any(bad):
            raise ValueError("grid points must be tagged 'inside' or 'outside'")

    @property
    def n_points(self) -> int:
        return int(self.points.size)

    def to_csv(self, path: str | Path) -> None:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(FIELD_CSV_HEADER)
            for z, r, v in zip(self.points, self.region, self.values):
                writer.writerow([f"{z.real:.17g}", f"{z.imag:.17g}", r, f"{v.real:.17g}", f"{v.imag:.17g}"])


def grid_points(curve: Curve, nx: int, ny: int, pad: float = 0.25) -> np.ndarray:
    """곡선 bbox 를 (지름 × pad) 만큼 넓힌 nx × ny 격자"""
    if nx < 1 or ny < 1:
        raise ValueError("grid must have at least one point per axis")
    xmin, ymin, xmax, ymax = curve.bbox
    margin = pad * curve.nominal_diameter
    xs = np.linspace(xmin - margin, xmax + margin, nx)
    ys = np.linspace(ymin - margin, ymax + margin, ny)
    return (xs[None, :] + 1j * ys[:, None]).ravel()


def sample_field(
    field: Callable,
    curve: Curve,
    points: np.ndarray,
    exclusion: float,
    provenance: Provenance,
) -> FieldOnGrid:
    """exclusion 보다 경계에 가까운 점을 빼고 field 를 평가합니다."""
    points = np.asarray(points, dtype=complex).ravel()
    keep = np.asarray(curve.distance(points)) > exclusion
    pts = points[keep]
    region = np.where(curve.inside_mask(pts), "inside", "outside")
    values = np.asarray(field(pts), dtype=complex) if pts.size else np.zeros(0, dtype=complex)
    logger.debug("sampled %d/%d grid points (exclusion %.3e)", pts.size, points.size, exclusion)
    return FieldOnGrid(points=pts, region=region, values=values, provenance=provenance)


# ============================================================
# 해 객체
# ============================================================
@dataclass
class JumpProblemSolution:
    """
    jump 문제의 해 F (Ω₊ ∪ Ω₋ 에서 정의).

    필드:
    - field / dz_field: z 배열 → complex 배열
    - exclusion: 이보다 경계에 가까운 점에서는 평가하지 않음
    - boundary_delta_factor: boundary_limit 의 δ₀ 배수
    - fd_step: L F 잔차용 유한차분 스텝
    """
    field: Callable
    dz_field: Callable
    method: Method
    params: LameParams
    jet: WhitneyJet
    exclusion: float
    boundary_delta_factor: float
    fd_step: float
    certificate: Dict[str, object] = dc_field(default_factory=dict)
    extension: Optional[Extension] = None
    rule: Optional[AreaRule] = None

    @property
    def curve(self) -> Curve:
        return self.jet.curve

    def __call__(self, z):
        return self.field(z)

    def jump(self, segments: Segments = None) -> np.ndarray:
        """F⁺ − F⁻ (세그먼트 중점)"""
        return boundary_jump(self.field, self.curve, segments, delta_factor=self.boundary_delta_factor)

    def dz_jump(self, segments: Segments = None) -> np.ndarray:
        """[∂z F]⁺ − [∂z F]⁻ (세그먼트 중점)"""
        return boundary_jump(self.dz_field, self.curve, segments, delta_factor=self.boundary_delta_factor)

    def jump_residuals(self, segments: Segments = None) -> tuple[float, float]:
        """(max|F⁺−F⁻−f0|, max|[∂zF]⁺−[∂zF]⁻−f1|)"""
        r0 = np.abs(self.jump(segments) - midpoint_values(self.jet.f0, segments, self.curve))
        r1 = np.abs(self.dz_jump(segments) - midpoint_values(self.jet.f1, segments, self.curve))
        return float(r0.max(initial=0.0)), float(r1.max(initial=0.0))

    def sample(self, points: np.ndarray) -> FieldOnGrid:
        return sample_field(self.field, self.curve, points, self.exclusion, "jump_solution")

    def metadata(self, probe_residuals: Optional[dict] = None, growth=None) -> SolutionMetadata:
        return SolutionMetadata(
            method=self.method,
            params=self.params.as_dict(),
            jet=self.jet.describe(),
            certificate=dict(self.certificate),
            probe_residuals=probe_residuals or {},
            growth=growth,
        )


# ============================================================
# 풀이기
# ============================================================
class BaseJumpSolver(ABC):
    """jump 문제 풀이기 공통 인터페이스"""

    name: Method

    @abstractmethod
    def solve(self, params: LameParams, jet: WhitneyJet, report: Optional[JetReport] = None) -> JumpProblemSolution:
        raise NotImplementedError


class CauchyTransformSolver(BaseJumpSolver):
    """F = C^L f"""

    name: Method = "cauchy_transform"

    def __init__(self, delta_factor: float = BOUNDARY_DELTA_FACTOR):
        self.delta_factor = delta_factor

    def solve(self, params: LameParams, jet: WhitneyJet, report: Optional[JetReport] = None) -> JumpProblemSolution:
        curve = jet.curve
        logger.info("cauchy_transform: %s (%d segments)", curve.label, curve.n_segments)
        return JumpProblemSolution(
            field=lambda z: lame_cauchy_transform(params, jet, z),
            dz_field=lambda z: lame_cauchy_transform_dz(params, jet, z),
            method=self.name,
            params=params,
            jet=jet,
            exclusion=CONTOUR_GUARD_FACTOR * curve.max_segment_length,
            boundary_delta_factor=self.delta_factor,
            fd_step=CONTOUR_FD_STEP,
        )


class WhitneyTeodorescuSolver(BaseJumpSolver):
    """
    F = χ_Ω f̃ − T_Ω^L[L_{α,β} f̃]

    Args:
        depth: Ω 의 interior Whitney 분해 깊이 (area rule)
        extension_depth: 확장용 여집합 분해 깊이 (None 이면 depth + EXTENSION_DEPTH_OFFSET)
        d: 곡선의 summability 지수 (None 이면 box-counting 추정)
    """

    name: Method = "whitney_teodorescu"

    def __init__(
        self,
        depth: int = 8,
        extension_depth: Optional[int] = None,
        d: Optional[float] = None,
        subdivision_levels: int = AREA_SUBDIVISION_LEVELS,
        boundary_samples: int = BOUNDARY_CELL_SAMPLES,
        delta_factor: float = FRACTAL_BOUNDARY_DELTA_FACTOR,
    ):
        self.depth = depth
        self.extension_depth = extension_depth if extension_depth is not None else depth + EXTENSION_DEPTH_OFFSET
        self.d = d
        self.subdivision_levels = subdivision_levels
        self.boundary_samples = boundary_samples
        self.delta_factor = delta_factor

    def _certificate(self, jet: WhitneyJet) -> Dict[str, object]:
        d = self.d
        estimated = d is None
        if estimated:
            d = box_dimension(jet.curve)
        # 매끈한 곡선의 추정치는 1 근처에서 흔들리므로 (1, 2) 안으로 눌러둠
        d_eff = float(np.clip(d, 1.0 + 1e-9, 2.0 - 1e-9))
        ok = certificate_available(d_eff, jet.nu)
        cert = {"d": d_eff, "d_estimated": estimated, "nu": jet.nu, "p": lp_exponent(d_eff, jet.nu), "available": ok}
        if not ok:
            warnings.warn(
                f"nu={jet.nu} <= d/2={d_eff / 2:.4f}: solving without the L^p (p>2) certificate",
                CertificateUnavailableWarning,
                stacklevel=3,
            )
        return cert

    def solve(self, params: LameParams, jet: WhitneyJet, report: Optional[JetReport] = None) -> JumpProblemSolution:
        curve = jet.curve
        certificate = self._certificate(jet)

        decomp = whitney_decompose(curve, self.depth, region="interior")
        rule = build_area_rule(decomp, self.subdivision_levels, self.boundary_samples)
        ext = extend(jet, depth=self.extension_depth, check=False)

        vals = ext.evaluate_all(rule.centers)
        lf = params.alpha * np.conj(vals.dz_dz) + params.beta * vals.dz_dzbar
        logger.info(
            "whitney_teodorescu: %s cells=%d ext_squares=%d max|Lf|=%.3e",
            curve.label, rule.n_cells, ext.n_squares, float(np.abs(lf).max(initial=0.0)),
        )

        def field(z):
            zz = np.asarray(z, dtype=complex)
            chi = curve.inside_mask(zz)
            return np.where(chi, ext.evaluate(zz), 0.0) - teodorescu(params, rule, lf, zz)

        def dz_field(z):
            zz = np.asarray(z, dtype=complex)
            chi = curve.inside_mask(zz)
            return np.where(chi, ext.dz(zz), 0.0) - teodorescu_dz(params, rule, lf, zz)

        finest = float(rule.sides.min()) if rule.n_cells else decomp.boundary_side
        return JumpProblemSolution(
            field=field,
            dz_field=dz_field,
            method=self.name,
            params=params,
            jet=jet,
            exclusion=3.0 * finest,
            boundary_delta_factor=self.delta_factor,
            fd_step=AREA_FD_STEP,
            certificate=certificate,
            extension=ext,
            rule=rule,
        )


SOLVERS: Dict[str, Type[BaseJumpSolver]] = {
    CauchyTransformSolver.name: CauchyTransformSolver,
    WhitneyTeodorescuSolver.name: WhitneyTeodorescuSolver,
}


def solve_jump_problem(
    params: LameParams,
    jet: WhitneyJet,
    method: Method = "cauchy_transform",
    check: bool = True,
    **opts,
) -> JumpProblemSolution:
    """
    jump 문제를 풉니다.

    Args:
        method: "cauchy_transform" 또는 "whitney_teodorescu"
        check: jet 호환성 검사 여부
        **opts: 풀이기 생성자 인자

    Raises:
        JetInvalidError: jet 이 Lip(1+ν, γ) 가 아닐 때
    """
    if method not in SOLVERS:
        raise ValueError(f"unknown method '{method}' (choose from {sorted(SOLVERS)})")
    report = None
    if check:
        report = check_jet(jet)
        if not report.valid:
            raise JetInvalidError(report.reason)
    return SOLVERS[method](**opts).solve(params, jet, report)


# ============================================================
# 사후 검사
# ============================================================
def anchored_difference(a: JumpProblemSolution, b: JumpProblemSolution, probes, anchor: int = 0) -> np.ndarray:
    """(F_a − F_a(anchor)) − (F_b − F_b(anchor))"""
    pts = np.asarray(probes, dtype=complex).ravel()
    fa, fb = np.asarray(a.field(pts)), np.asarray(b.field(pts))
    return (fa - fa[anchor]) - (fb - fb[anchor])


def method_agreement(a: JumpProblemSolution, b: JumpProblemSolution, probes) -> float:
    """anchored difference 의 표준편차 (상수 차이면 0)"""
    return float(np.std(anchored_difference(a, b, probes)))


def lame_residual(solution: JumpProblemSolution, probes, h: Optional[float] = None) -> np.ndarray:
    """
    |L_{α,β} F| (유한차분). 스텐실은 프로브와 같은 영역에 있고 exclusion 밖이어야 합니다.

    Raises:
        StencilOutOfDomainError
    """
    curve = solution.curve
    pts = np.asarray(probes, dtype=complex).ravel()
    h = solution.fd_step if h is None else h
    side = curve.inside_mask(pts)

    def same_region(stencil):
        return (curve.inside_mask(stencil) == side[:, None]) & (np.asarray(curve.distance(stencil)) > solution.exclusion)

    lf = apply_lame_operator_fd(solution.params, solution.field, pts, h=h, domain=same_region)
    return np.abs(np.atleast_1d(lf))
