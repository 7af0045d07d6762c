"""
cli/main.py
============================================================
명령행 진입점

서브커맨드:
- geometry          곡선 polyline CSV + Whitney 분해 CSV + d-sum 리포트
- jet make|check    필드에서 jet CSV 만들기 / jet 호환성 검사
- teodorescu        T_Ω^L[g] 를 격자에서 평가
- cauchy-transform  C^L f 를 격자에서 평가
- solve             jump 문제 풀이 (필드 CSV + 잔차 JSON)
- verify SUITE      검증 스위트 실행 (JSON 리포트)

종료 코드:
- 0: 성공
- 1: 검증 실패
- 2: 사용 오류 / 입력 오류 (LameError 포함)

사용 예:
    python main.py geometry --koch 5 --depth 10 --d 1.5
    python main.py jet make --field z2 --segments 1024 --out out
    python main.py solve --jet out/jet.csv --method whitney_teodorescu --depth 8
    python main.py verify jumps --seed 7 --tol jump_f0=5e-3
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import warnings
from pathlib import Path
from typing import Optional, Sequence

from commands.registry import VERIFY_SUITES
from elasticity.fields import NAMED_FIELDS
from errors import CertificateUnavailableWarning, LameError
from geometry.boxcount import box_dimension
from geometry.curve import Curve
from geometry.decomposition import d_sum, d_sum_levels, level_growth_exponent, whitney_decompose
from geometry.generators import make_circle, make_koch_snowflake
from operators.boundary import probe_segments
from operators.growth import asymptotic_growth_check
from operators.jump_problem import grid_points, sample_field, solve_jump_problem
from operators.lame_cauchy import lame_cauchy_transform
from operators.teodorescu import teodorescu
from quadrature.area import build_area_rule
from schemas.run_config import RunConfig, load_run_config, parse_grid, parse_tolerance, validate_run_config
from whitney.jet import WhitneyJet, check_jet, jet_from_field
from verification.runner import run_suite, write_report

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2

_SUITES = list(VERIFY_SUITES)


class UsageError(Exception):
    """플래그/설정 오류 (exit 2)"""


# ============================================================
# 파서
# ============================================================
def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--lambda", dest="lam", type=float, help="Lamé 제1상수 λ")
    common.add_argument("--mu", type=float, help="전단 탄성계수 μ")
    common.add_argument("--nu", type=float, help="jet Hölder 지수 ν ∈ (0, 1)")
    common.add_argument("--d", type=float, help="summability 지수 d ∈ (1, 2)")
    common.add_argument("--depth", type=int, help="Whitney 분해 깊이")
    common.add_argument("--segments", type=int, help="원 polyline 세그먼트 수")
    common.add_argument("--circle", type=float, metavar="RADIUS", help="원 곡선 (반지름)")
    common.add_argument("--koch", type=int, metavar="GEN", help="Koch snowflake 곡선 (세대)")
    common.add_argument("--curve-file", help="x,y polyline CSV")
    common.add_argument("--jet", dest="jet_file", help="jet CSV 경로")
    common.add_argument("--field", help=f"이름 있는 필드 ({', '.join(NAMED_FIELDS)})")
    common.add_argument("--method", choices=["cauchy_transform", "whitney_teodorescu"])
    common.add_argument("--grid", help="격자 NxM")
    common.add_argument("--out", help="출력 디렉터리")
    common.add_argument("--config", help="JSON 설정 파일 (플래그가 우선)")
    common.add_argument("--seed", type=int, help="난수 seed")
    common.add_argument("--tol", action="append", default=[], metavar="NAME=VAL", help="허용오차 덮어쓰기")
    common.add_argument("-v", "--verbose", action="store_true", help="DEBUG 로그")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(prog="lame", description="plane Lamé-Navier complex calculus toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("geometry", parents=[common], help="곡선 + Whitney 분해 + d-sum 리포트")

    jet = sub.add_parser("jet", help="jet CSV 만들기 / 검사")
    jet_sub = jet.add_subparsers(dest="jet_command", required=True)
    jet_sub.add_parser("make", parents=[common], help="이름 있는 필드에서 jet CSV 생성")
    jet_sub.add_parser("check", parents=[common], help="jet 호환성 검사")

    sub.add_parser("teodorescu", parents=[common], help="T_Ω^L[g] 격자 평가 (g = --field)")
    sub.add_parser("cauchy-transform", parents=[common], help="C^L f 격자 평가")
    sub.add_parser("solve", parents=[common], help="jump 문제 풀이")

    verify = sub.add_parser("verify", parents=[common], help="검증 스위트 실행")
    verify.add_argument("suite", choices=_SUITES + ["all"])
    return parser


def _run_config(args: argparse.Namespace) -> RunConfig:
    tol_overrides = {}
    for item in args.tol:
        parsed = parse_tolerance(item)
        if parsed is None:
            raise UsageError(f"bad --tol entry '{item}' (expected NAME=VAL)")
        tol_overrides[parsed[0]] = parsed[1]

    overrides = {
        "lam": args.lam, "mu": args.mu, "nu": args.nu, "d": args.d, "depth": args.depth,
        "segments": args.segments, "jet_file": args.jet_file, "field": args.field, "method": args.method,
        "out": args.out, "seed": args.seed, "curve_file": args.curve_file,
    }
    if args.grid is not None:
        grid = parse_grid(args.grid)
        if grid is None:
            raise UsageError(f"bad --grid '{args.grid}' (expected NxM)")
        overrides["grid"] = grid
    if args.koch is not None:
        overrides.update(curve="koch", koch=args.koch)
    elif args.circle is not None:
        overrides.update(curve="circle", radius=args.circle)
    elif args.curve_file is not None:
        overrides["curve"] = "file"

    try:
        cfg = load_run_config(args.config, overrides, tol_overrides)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    ok, reason = validate_run_config(cfg)
    if not ok:
        raise UsageError(reason)
    return cfg


# ============================================================
# 공통 헬퍼
# ============================================================
def build_curve(cfg: RunConfig) -> Curve:
    if cfg.curve == "koch":
        return make_koch_snowflake(cfg.koch)
    if cfg.curve == "file":
        path = Path(cfg.curve_file)
        if not path.is_file():
            raise UsageError(f"curve file not found: {path}")
        return Curve.from_csv(path)
    return make_circle(radius=cfg.radius, n_segments=cfg.segments)


def load_jet(cfg: RunConfig) -> WhitneyJet:
    if cfg.jet_file:
        path = Path(cfg.jet_file)
        if not path.is_file():
            raise UsageError(f"jet file not found: {path}")
        return WhitneyJet.from_csv(path, nu=cfg.nu)
    return jet_from_field(_named_field(cfg.field), build_curve(cfg), cfg.nu)


def _named_field(name: str):
    if name not in NAMED_FIELDS:
        raise UsageError(f"unknown field '{name}' (choose from {', '.join(NAMED_FIELDS)})")
    return NAMED_FIELDS[name]()


def _write_json(path: Path, payload) -> None:
    path.write_text(json.dumps(payload, indent=2, sort_keys=True), encoding="utf-8")


# ============================================================
# 서브커맨드
# ============================================================
def cmd_geometry(cfg: RunConfig) -> int:
    curve = build_curve(cfg)
    out = cfg.out_dir()
    curve.to_csv(out / "curve.csv")
    decomp = whitney_decompose(curve, cfg.depth, region="interior")
    decomp.to_csv(out / "decomposition.csv")

    slope = box_dimension(curve)
    report = {
        "curve": curve.label,
        "n_segments": curve.n_segments,
        "depth": cfg.depth,
        "box_dimension": slope,
        "n_squares": decomp.n_squares,
        "level_counts": decomp.level_counts().tolist(),
        "uncovered_area": decomp.uncovered_area,
    }
    if cfg.d is not None:
        increments = d_sum_levels(decomp, cfg.d)
        ratios = [float(b / a) if a > 0 else None for a, b in zip(increments[:-1], increments[1:])]
        report.update(d=cfg.d, d_sum=d_sum(decomp, cfg.d), d_sum_increments=increments.tolist(),
                      increment_ratios=ratios)
        try:
            report["level_growth_exponent"] = level_growth_exponent(decomp)
        except ValueError as exc:
            print(f"[WARN] {exc}")
    _write_json(out / "geometry_report.json", report)

    print(f"[INFO] {curve!r} box-dimension slope = {slope:.4f}")
    if cfg.d is not None:
        print(f"[INFO] d-sum (d={cfg.d}) per depth:")
        for k, inc in enumerate(report["d_sum_increments"]):
            if inc > 0:
                print(f"    depth {k:2d}: {inc:.6e}")
    print(f"[DONE] wrote {out / 'curve.csv'}, {out / 'decomposition.csv'}, {out / 'geometry_report.json'}")
    return EXIT_OK


def cmd_jet(cfg: RunConfig, action: str) -> int:
    out = cfg.out_dir()
    if action == "make":
        field = _named_field(cfg.field)
        jet = jet_from_field(field, build_curve(cfg), cfg.nu)
        path = Path(cfg.jet_file) if cfg.jet_file else out / "jet.csv"
        jet.to_csv(path)
        print(f"[DONE] jet of '{field.name}' on {jet.curve!r} -> {path}")
        return EXIT_OK

    jet = load_jet(cfg)
    report = check_jet(jet, seed=cfg.seed)
    _write_json(out / "jet_report.json", report.model_dump(mode="json"))
    if not report.valid:
        print(f"[WARN] jet invalid: {report.reason}")
        return EXIT_USAGE
    print(f"[OK] jet valid (c_min={report.c_min:.4g}, slope={report.scaling_slope})")
    return EXIT_OK


def cmd_teodorescu(cfg: RunConfig) -> int:
    params = cfg.params()
    curve = build_curve(cfg)
    rule = build_area_rule(whitney_decompose(curve, cfg.depth, region="interior"))
    g = _named_field(cfg.field)
    density = g.value(rule.centers)
    exclusion = 3.0 * float(rule.sides.min())
    grid = sample_field(lambda z: teodorescu(params, rule, density, z), curve,
                        grid_points(curve, *cfg.grid), exclusion, "teodorescu")
    path = cfg.out_dir() / "teodorescu.csv"
    grid.to_csv(path)
    print(f"[DONE] T[{g.name}] on {grid.n_points} points ({rule.n_cells} cells) -> {path}")
    return EXIT_OK


def cmd_cauchy_transform(cfg: RunConfig) -> int:
    params = cfg.params()
    jet = load_jet(cfg)
    curve = jet.curve
    pts = grid_points(curve, *cfg.grid)
    exclusion = 3.0 * curve.max_segment_length
    grid = sample_field(lambda z: lame_cauchy_transform(params, jet, z), curve, pts, exclusion, "lame_cauchy")
    path = cfg.out_dir() / "cauchy_transform.csv"
    grid.to_csv(path)
    print(f"[DONE] C^L on {grid.n_points} points -> {path}")
    return EXIT_OK


def cmd_solve(cfg: RunConfig) -> int:
    params = cfg.params()
    if not cfg.jet_file:
        raise UsageError("solve needs --jet FILE")
    jet = load_jet(cfg)
    opts = {"depth": cfg.depth, "d": cfg.d} if cfg.method == "whitney_teodorescu" else {}

    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", CertificateUnavailableWarning)
        solution = solve_jump_problem(params, jet, cfg.method, **opts)
    for w in caught:
        print(f"[WARN] {w.message}")

    out = cfg.out_dir()
    grid = solution.sample(grid_points(jet.curve, *cfg.grid))
    grid.to_csv(out / "solution.csv")

    segments = probe_segments(jet.curve, 8)
    residuals = {"probe_segments": segments.tolist()}
    try:
        r0, r1 = solution.jump_residuals(segments)
        residuals.update(jump_f0=r0, jump_f1=r1)
    except LameError as exc:
        residuals["jump_error"] = f"{type(exc).__name__}: {exc}"
        print(f"[WARN] boundary limits: {exc}")
    growth = asymptotic_growth_check(solution, (10.0, 100.0, 1000.0))
    meta = solution.metadata(probe_residuals=residuals, growth=growth)
    payload = meta.model_dump(mode="json")
    payload["jet_file"] = cfg.jet_file
    _write_json(out / "solution.json", payload)

    if "jump_f0" in residuals:
        print(f"[INFO] jump residuals: f0={residuals['jump_f0']:.3e}  f1={residuals['jump_f1']:.3e}")
    print(f"[INFO] growth bounded={growth.bounded} decaying={growth.decaying}")
    print(f"[DONE] {cfg.method}: {grid.n_points} grid points -> {out / 'solution.csv'}, {out / 'solution.json'}")
    return EXIT_OK


def cmd_verify(cfg: RunConfig, suite: str) -> int:
    params = cfg.params()
    suites = _SUITES if suite == "all" else [suite]
    all_passed = True
    for name in suites:
        report = run_suite(name, params=params, tolerances=cfg.tolerances, seed=cfg.seed, nu=cfg.nu)
        write_report(report, cfg.out_dir())
        for check in report.checks:
            tag = "[OK]" if check.passed else "[FAIL]"
            tol = "info" if check.tolerance is None else f"tol {check.tolerance:.1e}"
            print(f"{tag} {name}.{check.name}: {check.value:.4e} ({tol})")
        for stage in report.stages:
            if stage.status == "error":
                print(f"[WARN] {name}: {stage.message}")
        all_passed = all_passed and report.passed
    print(f"[DONE] verify {suite}: {'passed' if all_passed else 'FAILED'}")
    return EXIT_OK if all_passed else EXIT_FAILED


# ============================================================
# main
# ============================================================
def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE

    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.INFO,
                        format="[%(levelname)s] %(name)s: %(message)s")
    try:
        cfg = _run_config(args)
        if args.command == "geometry":
            return cmd_geometry(cfg)
        if args.command == "jet":
            return cmd_jet(cfg, args.jet_command)
        if args.command == "teodorescu":
            return cmd_teodorescu(cfg)
        if args.command == "cauchy-transform":
            return cmd_cauchy_transform(cfg)
        if args.command == "solve":
            return cmd_solve(cfg)
        return cmd_verify(cfg, args.suite)
    except (UsageError, LameError) as exc:
        print(f"[ERROR] {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
