"""
verification/suites.py
============================================================
verify 스위트 구현 (identities, inverse, borel_pompeiu, cauchy, jumps, fractal, growth)

설명:
- 스위트 함수는 SuiteContext 를 받아 CheckResult 목록을 돌려줍니다.
- 검사 이름, 근거 문구(anchor), 허용오차 키는 commands/registry.py 의 VERIFY_SUITES 를 따릅니다.
- 프로브 샘플링은 Philox (counter-based) 생성기로 seed 를 고정합니다.

Note:
- 기준값은 모두 해석적 oracle 입니다 (residue 계산, 극좌표 적분, 커널 원소).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

import numpy as np

from commands.registry import VERIFY_SUITES
from config import EXTENSION_DEPTH_OFFSET
from elasticity.fields import (
    conj_power_field,
    constant_field,
    exp_field,
    modulus_square_field,
    power_field,
    sin_modulus_field,
    universal_displacement,
    z2_zbar_field,
)
from elasticity.operator import apply_lame_operator, apply_lame_operator_fd
from elasticity.params import LameParams, make_params
from geometry.boxcount import box_dimension
from geometry.curve import Curve
from geometry.decomposition import d_sum_levels, level_growth_exponent, whitney_decompose
from geometry.generators import make_circle, make_koch_snowflake
from operators.boundary import probe_segments
from operators.growth import asymptotic_growth_check
from operators.jump_problem import lame_residual, method_agreement, solve_jump_problem
from operators.lame_cauchy import lame_cauchy_transform
from operators.representation import log_kernel_repr, ratio_kernel_repr, borel_pompeiu_rhs, cauchy_repr
from operators.teodorescu import teodorescu, verify_right_inverse
from quadrature.area import build_area_rule
from schemas.reports import CheckResult
from whitney.extension import extend
from whitney.jet import check_jet, constant_jet, jet_from_field
from whitney.lp import certificate_available, lp_exponent, lp_norm_estimate

logger = logging.getLogger(__name__)

KOCH_DIMENSION = np.log(4.0) / np.log(3.0)


@dataclass
class SuiteContext:
    """스위트 실행 환경 (상수, 허용오차, 난수)"""
    params: LameParams
    tolerances: Dict[str, float]
    seed: int
    nu: float = 0.9
    rng: np.random.Generator = field(init=False)

    def __post_init__(self):
        self.rng = np.random.Generator(np.random.Philox(self.seed))

    def disk_probes(self, n: int, r_max: float) -> np.ndarray:
        """반지름 r_max 원판 안의 균일 샘플"""
        r = r_max * np.sqrt(self.rng.uniform(0.0, 1.0, n))
        theta = self.rng.uniform(0.0, 2.0 * np.pi, n)
        return r * np.exp(1j * theta)

    def annulus_probes(self, n: int, r_min: float, r_max: float) -> np.ndarray:
        r = self.rng.uniform(r_min, r_max, n)
        theta = self.rng.uniform(0.0, 2.0 * np.pi, n)
        return r * np.exp(1j * theta)


def _check(
    ctx: SuiteContext,
    suite: str,
    name: str,
    value: float,
    passed: Optional[bool] = None,
    **detail,
) -> CheckResult:
    """레지스트리의 anchor / 허용오차로 CheckResult 를 만듭니다."""
    entry = VERIFY_SUITES[suite]["checks"][name]
    tol_key = entry["tolerance"]
    tol = ctx.tolerances[tol_key] if tol_key is not None else None
    value = float(value)
    if passed is None:
        passed = True if tol is None else bool(value <= tol)
    return CheckResult(
        name=name, value=value, tolerance=tol, passed=bool(passed), anchor=entry["anchor"],
        detail={k: _jsonable(v) for k, v in detail.items()},
    )


def _jsonable(v):
    if isinstance(v, np.ndarray):
        return [_jsonable(x) for x in v.tolist()]
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, complex):
        return [v.real, v.imag]
    if isinstance(v, np.generic):
        return v.item()
    return v


def _max_abs(x) -> float:
    return float(np.max(np.abs(np.asarray(x))))


# ============================================================
# identities
# ============================================================
def _universal_fields():
    return [
        universal_displacement(1.0, power_field(2)),
        universal_displacement(0.5 - 1.0j, power_field(3)),
        universal_displacement(2.0j, exp_field()),
        universal_displacement(0.0, power_field(4)),
        universal_displacement(-1.0 + 0.5j, power_field(1)),
    ]


def suite_identities(ctx: SuiteContext) -> List[CheckResult]:
    s = "identities"
    first, second = [], []
    for mu in np.geomspace(0.1, 10.0, 10):
        for lam in np.linspace(-0.6 * mu, 10.0 * mu, 10):
            r1, r2 = make_params(lam, mu).identity_residuals()
            first.append(r1)
            second.append(r2)
    checks = [
        _check(ctx, s, "coefficient_identity", max(first), n_pairs=len(first)),
        _check(ctx, s, "coefficient_symmetry", max(second), n_pairs=len(second)),
        _check(ctx, s, "symmetric_sum", ctx.params.symmetric_sum, params=ctx.params.as_dict()),
    ]

    param_sets = [make_params(1.0, 1.0), make_params(2.0, 0.5), make_params(-0.3, 1.0)]
    pts = ctx.disk_probes(16, 0.9)
    exact, fd = 0.0, 0.0
    for p in param_sets:
        for f in _universal_fields():
            exact = max(exact, _max_abs(apply_lame_operator(p, f, pts)))
            fd = max(fd, _max_abs(apply_lame_operator_fd(p, f, pts)))
    checks.append(_check(ctx, s, "kernel_exact", exact, n_fields=5, n_params=len(param_sets)))
    checks.append(_check(ctx, s, "kernel_fd", fd, n_fields=5, n_params=len(param_sets)))

    f = sin_modulus_field()
    z0 = 0.3 + 0.2j
    ref = apply_lame_operator(ctx.params, f, z0)
    err_h = abs(apply_lame_operator_fd(ctx.params, f, z0, h=1e-2) - ref)
    err_h2 = abs(apply_lame_operator_fd(ctx.params, f, z0, h=5e-3) - ref)
    rate = err_h / err_h2
    ok = ctx.tolerances["fd_rate_low"] <= rate <= ctx.tolerances["fd_rate_high"]
    checks.append(_check(ctx, s, "fd_convergence_rate", rate, passed=ok, err_h=err_h, err_h_half=err_h2,
                         rate_high=ctx.tolerances["fd_rate_high"]))
    return checks


# ============================================================
# inverse
# ============================================================
INVERSE_SEGMENTS = 256
INVERSE_SUBDIVISION = 3


def suite_inverse(ctx: SuiteContext) -> List[CheckResult]:
    s = "inverse"
    disk = make_circle(n_segments=INVERSE_SEGMENTS)
    z0 = 0.2 + 0.1j
    g_one = lambda z: np.ones_like(np.asarray(z, dtype=complex))  # noqa: E731
    g_xi = lambda z: np.asarray(z, dtype=complex)  # noqa: E731

    spread = ctx.disk_probes(8, 0.6)
    checks: List[CheckResult] = []
    residuals, mean_xi = {}, {}
    for depth in (8, 10):
        rule = build_area_rule(whitney_decompose(disk, depth, region="interior"), INVERSE_SUBDIVISION)
        if depth == 8:
            polar = abs(teodorescu(ctx.params, rule, g_one, 0.0) - ctx.params.beta_star)
            checks.append(_check(ctx, s, "teodorescu_polar", polar, expected=ctx.params.beta_star))
        residuals[("one", depth)] = verify_right_inverse(ctx.params, rule, g_one, z0)
        residuals[("xi", depth)] = verify_right_inverse(ctx.params, rule, g_xi, z0)
        mean_xi[depth] = float(np.mean(verify_right_inverse(ctx.params, rule, g_xi, spread)))
        checks.append(_check(ctx, s, f"right_inverse_one_depth{depth}", residuals[("one", depth)], cells=rule.n_cells))
        checks.append(_check(ctx, s, f"right_inverse_xi_depth{depth}", residuals[("xi", depth)], cells=rule.n_cells))
        if depth == 10:
            ext = verify_right_inverse(ctx.params, rule, g_one, 4.0)
            checks.append(_check(ctx, s, "right_inverse_exterior", ext, point=4.0))

    # 8개 점 평균 잔차의 비율
    ratio = mean_xi[8] / max(mean_xi[10], 1e-300)
    checks.append(_check(ctx, s, "depth_improvement", ratio, passed=ratio >= ctx.tolerances["depth_improvement"],
                         depth8=mean_xi[8], depth10=mean_xi[10], n_probes=spread.size))
    return checks


# ============================================================
# borel_pompeiu / cauchy
# ============================================================
BP_SEGMENTS = 4096
BP_DEPTH = 8


def suite_borel_pompeiu(ctx: SuiteContext) -> List[CheckResult]:
    s = "borel_pompeiu"
    disk = make_circle(n_segments=BP_SEGMENTS)
    rule = build_area_rule(whitney_decompose(disk, BP_DEPTH, region="interior"))
    probes = ctx.disk_probes(20, 0.8)

    cases = {
        "bp_z": power_field(1),
        "bp_conj_z2": conj_power_field(2),
        "bp_modulus_square": modulus_square_field(),
        "bp_z2_conj_z": z2_zbar_field(),
    }
    checks = []
    for name, f in cases.items():
        err = _max_abs(borel_pompeiu_rhs(ctx.params, disk, f, rule, probes) - f(probes))
        checks.append(_check(ctx, s, name, err, field=f.name, n_probes=probes.size))

    outside = ctx.annulus_probes(8, 1.5, 3.0)
    ext = max(_max_abs(borel_pompeiu_rhs(ctx.params, disk, f, rule, outside)) for f in cases.values())
    checks.append(_check(ctx, s, "bp_exterior", ext, n_probes=outside.size))

    second_order = [modulus_square_field(), z2_zbar_field()]
    ratio_err = max(_max_abs(ratio_kernel_repr(disk, f, rule, probes) - f(probes)) for f in second_order)
    log_err = max(_max_abs(log_kernel_repr(disk, f, rule, probes) - f(probes)) for f in second_order)
    checks.append(_check(ctx, s, "ratio_representation", ratio_err))
    checks.append(_check(ctx, s, "log_representation", log_err))
    return checks


CAUCHY_SEGMENTS = 1024


def suite_cauchy(ctx: SuiteContext) -> List[CheckResult]:
    s = "cauchy"
    disk = make_circle(n_segments=CAUCHY_SEGMENTS)
    probes = ctx.disk_probes(20, 0.8)
    fields = _universal_fields() + [power_field(1), conj_power_field(2)]
    err = max(_max_abs(cauchy_repr(ctx.params, disk, f, probes) - f(probes)) for f in fields)
    c = constant_field(2.0 - 1.0j)
    err_c = _max_abs(cauchy_repr(ctx.params, disk, c, probes) - c(probes))
    return [
        _check(ctx, s, "cauchy_universal", err, n_fields=len(fields), n_probes=probes.size),
        _check(ctx, s, "cauchy_constant", err_c),
    ]


# ============================================================
# jumps
# ============================================================
JUMP_SEGMENTS = 1024
JUMP_PROBES = 8
SOLVER_DEPTH = 8


def _smooth_jets(curve: Curve, nu: float) -> Dict[str, object]:
    return {
        "one": constant_jet(curve, 1.0, nu),
        "z": jet_from_field(power_field(1), curve, nu),
        "z2": jet_from_field(power_field(2), curve, nu),
    }


def suite_jumps(ctx: SuiteContext) -> List[CheckResult]:
    s = "jumps"
    disk = make_circle(n_segments=JUMP_SEGMENTS)
    jets = _smooth_jets(disk, ctx.nu)

    one = jets["one"]
    closed = max(abs(lame_cauchy_transform(ctx.params, one, 0.0) - 1.0),
                 abs(lame_cauchy_transform(ctx.params, one, 3.0)))
    checks = [_check(ctx, s, "closed_form_transform", closed)]

    segments = probe_segments(disk, JUMP_PROBES)
    inside = ctx.disk_probes(20, 0.8)
    fd_probes = np.concatenate([inside[:4], ctx.annulus_probes(4, 1.3, 2.0)])
    lame_worst = 0.0
    for key, jet in jets.items():
        sol = solve_jump_problem(ctx.params, jet, "cauchy_transform")
        r0, r1 = sol.jump_residuals(segments)
        checks.append(_check(ctx, s, f"jump_f0_{key}", r0, n_probes=segments.size))
        checks.append(_check(ctx, s, f"jump_f1_{key}", r1, n_probes=segments.size))
        lame_worst = max(lame_worst, float(lame_residual(sol, fd_probes).max()))

        fractal_sol = solve_jump_problem(ctx.params, jet, "whitney_teodorescu", check=False, depth=SOLVER_DEPTH)
        spread = method_agreement(sol, fractal_sol, inside)
        checks.append(_check(ctx, s, f"method_agreement_{key}", spread, n_probes=inside.size))
    checks.append(_check(ctx, s, "lame_residual", lame_worst, n_probes=fd_probes.size))
    return checks


# ============================================================
# fractal
# ============================================================
KOCH_DIMENSION_GENERATION = 6
KOCH_SOLVE_GENERATION = 5
FRACTAL_DEPTH = 10


def suite_fractal(ctx: SuiteContext) -> List[CheckResult]:
    s = "fractal"
    checks = []

    koch = make_koch_snowflake(KOCH_DIMENSION_GENERATION)
    dim = box_dimension(koch)
    checks.append(_check(ctx, s, "box_dimension", abs(dim - KOCH_DIMENSION), slope=dim, expected=KOCH_DIMENSION))

    decomp10 = whitney_decompose(koch, FRACTAL_DEPTH, region="interior")
    growth = level_growth_exponent(decomp10)
    for name, d, should_shrink in (("dsum_converges", 1.5, True), ("dsum_diverges", 1.1, False)):
        ratio = 2.0 ** (growth - d)
        increments = d_sum_levels(decomp10, d)
        ok = ratio < 1.0 if should_shrink else ratio >= 1.0
        checks.append(_check(ctx, s, name, ratio, passed=ok, d=d, growth_exponent=growth,
                             increments=increments, halves_per_level=bool(ratio <= 0.5)))

    decomp8 = whitney_decompose(koch, 8, region="interior")
    collar = decomp10.uncovered_area / max(decomp8.uncovered_area, 1e-300)
    checks.append(_check(ctx, s, "uncovered_collar", collar, passed=collar < 1.0,
                         depth8=decomp8.uncovered_area, depth10=decomp10.uncovered_area))

    mismatches = 0
    for d in 1.05 + 0.1 * np.arange(10):
        for nu in 0.05 + 0.1 * np.arange(10):
            mismatches += int((lp_exponent(d, nu) > 2.0) != certificate_available(d, nu))
    checks.append(_check(ctx, s, "lp_exponent_grid", mismatches, passed=mismatches == 0, grid="10x10"))

    checks += _extension_checks(ctx, s)

    koch5 = make_koch_snowflake(KOCH_SOLVE_GENERATION)
    jet = constant_jet(koch5, 1.0, 0.9)
    sol = solve_jump_problem(ctx.params, jet, "whitney_teodorescu", depth=SOLVER_DEPTH, d=1.3)
    segments = probe_segments(koch5, JUMP_PROBES)
    r0, _ = sol.jump_residuals(segments)
    checks.append(_check(ctx, s, "fractal_jump", r0, n_probes=segments.size, certificate=sol.certificate))

    xmin, ymin, xmax, ymax = koch5.bbox
    center = complex(0.5 * (xmin + xmax), 0.5 * (ymin + ymax))
    reach = float(np.max(np.abs(koch5.vertices - center)))
    probes = np.concatenate([center + 0.1 * reach * np.exp(2j * np.pi * np.arange(3) / 3),
                             center + 1.3 * reach * np.exp(2j * np.pi * np.arange(3) / 3)])
    res = float(lame_residual(sol, probes).max())
    checks.append(_check(ctx, s, "fractal_lame_residual", res, n_probes=probes.size))
    return checks


LP_STABILITY_P = 3.0
KOCH_EXTENSION_NU = 0.8
KOCH_LP_D = 1.3
KOCH_LP_P = 3.5


def _extension_checks(ctx: SuiteContext, s: str) -> List[CheckResult]:
    disk = make_circle(n_segments=256)
    jet = jet_from_field(power_field(2), disk, ctx.nu)
    ext = extend(jet, depth=FRACTAL_DEPTH + EXTENSION_DEPTH_OFFSET, check=False)
    estimates = {depth: lp_norm_estimate(ext, whitney_decompose(disk, depth, region="interior"),
                                         LP_STABILITY_P).total
                 for depth in (8, 10)}
    change = abs(estimates[10] - estimates[8]) / max(abs(estimates[10]), 1e-300)
    checks = [_check(ctx, s, "lp_stability", change, p=LP_STABILITY_P, depth8=estimates[8], depth10=estimates[10])]

    koch = make_koch_snowflake(KOCH_SOLVE_GENERATION)
    koch_jet = jet_from_field(power_field(2), koch, KOCH_EXTENSION_NU)
    report = check_jet(koch_jet, seed=ctx.seed)
    koch_ext = extend(koch_jet, depth=FRACTAL_DEPTH + EXTENSION_DEPTH_OFFSET, report=report)

    # 증분이 줄어드는지: 마지막 세 레벨의 연속 비율
    estimate = lp_norm_estimate(koch_ext, whitney_decompose(koch, FRACTAL_DEPTH, region="interior"), KOCH_LP_P)
    levels, increments = estimate.level_increments()
    tail = increments[-3:]
    ratio = float(np.max(tail[1:] / np.maximum(tail[:-1], 1e-300)))
    checks.append(_check(ctx, s, "lp_fractal_increments", ratio, passed=ratio < 1.0, d=KOCH_LP_D, p=KOCH_LP_P,
                         nu=KOCH_EXTENSION_NU, levels=levels, increments=increments,
                         halves_per_level=bool(ratio <= 0.5)))

    # collar 표본에서 |∂²f̃|·dist^{1−ν} ≤ factor · c_min
    decomp = koch_ext.decomposition
    dist = decomp.square_distances
    near = dist < 0.25 * koch.nominal_diameter
    offsets = np.tile(np.array([0.25, 1.0, 4.0]) * decomp.boundary_side, koch.n_segments)
    mids = np.repeat(koch.midpoints, 3)
    normals = np.repeat(koch.inward_normals, 3)
    samples = np.concatenate([decomp.centers[near], mids + offsets * normals, mids - offsets * normals])
    sample_dist = np.atleast_1d(koch.distance(samples))
    keep = sample_dist > 0.0
    zz, zb, bb = koch_ext.second_derivatives(samples[keep])
    mag = np.maximum.reduce([np.abs(zz), np.abs(zb), np.abs(bb)])
    weighted = float(np.max(mag * sample_dist[keep] ** (1.0 - KOCH_EXTENSION_NU)))
    bound = weighted / max(report.c_min, 1e-300)
    checks.append(_check(ctx, s, "extension_blowup", bound, c_min=report.c_min, weighted_max=weighted,
                         n_samples=int(keep.sum())))
    return checks


# ============================================================
# growth
# ============================================================
GROWTH_SEGMENTS = 256
GROWTH_RADII = (10.0, 100.0, 1000.0)


def suite_growth(ctx: SuiteContext) -> List[CheckResult]:
    s = "growth"
    disk = make_circle(n_segments=GROWTH_SEGMENTS)
    jets = _smooth_jets(disk, ctx.nu)
    checks = []
    reports = {}
    for key in ("one", "z2"):
        sol = solve_jump_problem(ctx.params, jets[key], "cauchy_transform")
        rep = asymptotic_growth_check(sol, GROWTH_RADII, ratio_factor=ctx.tolerances["growth_ratio_factor"],
                                      dz_tol=ctx.tolerances["growth_dz"])
        reports[key] = rep
        base = rep.ratios[0]
        value = max(rep.ratios) / base if base > 1e-12 else max(rep.ratios)
        checks.append(_check(ctx, s, f"growth_bounded_{key}", value, passed=rep.bounded, ratios=rep.ratios))

    z2 = reports["z2"]
    checks.append(_check(ctx, s, "dz_decay_z2", z2.dz_max[-1], radius=z2.radii[-1], dz_max=z2.dz_max))
    checks.append(_check(ctx, s, "potential_decay_z2", z2.potential_max[-1], potential_max=z2.potential_max))

    zero = solve_jump_problem(ctx.params, constant_jet(disk, 0.0, ctx.nu), "cauchy_transform")
    zrep = asymptotic_growth_check(zero, GROWTH_RADII)
    checks.append(_check(ctx, s, "zero_jet", max(zrep.ratios), ratios=zrep.ratios))
    return checks


SUITE_FUNCTIONS: Dict[str, Callable[[SuiteContext], List[CheckResult]]] = {
    "identities": suite_identities,
    "inverse": suite_inverse,
    "borel_pompeiu": suite_borel_pompeiu,
    "cauchy": suite_cauchy,
    "jumps": suite_jumps,
    "fractal": suite_fractal,
    "growth": suite_growth,
}
