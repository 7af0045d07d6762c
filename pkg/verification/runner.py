"""
verification/runner.py
============================================================
verify 스위트 실행기 (stage 기록 + JSON 리포트)

설명:
- run_suite 는 스위트 이름을 레지스트리로 검증하고, 스위트 함수를 실행해 SuiteReport 를 만듭니다.
- StageLogger 가 stage 별 시작/끝과 경과 시간을 기록합니다.
- 리포트는 두 파일로 나눠 씁니다.
    <suite>_report.json : 검사 결과 (같은 설정 + seed 면 바이트 단위로 같음)
    <suite>_stages.json : stage 기록 (경과 시간 포함)
"""

from __future__ import annotations

import json
import logging
import time
from pathlib import Path
from typing import Dict, List, Optional

from commands.registry import VERIFY_SUITES, validate_suite
from config import DEFAULT_SEED, DEFAULT_TOLERANCES
from elasticity.params import LameParams, make_params
from errors import LameError
from schemas.reports import CheckResult, StageRecord, SuiteReport
from verification.suites import SUITE_FUNCTIONS, SuiteContext

logger = logging.getLogger(__name__)


class StageLogger:
    """stage 단위 구조화 기록"""

    def __init__(self, suite: str, seed: int):
        self.suite = suite
        self.seed = seed
        self.records: List[StageRecord] = []
        self._open: Dict[str, float] = {}

    def begin(self, stage: str) -> None:
        self._open[stage] = time.perf_counter()
        logger.info("[%s] begin %s (seed=%d)", self.suite, stage, self.seed)

    def end(self, stage: str, status: str = "ok", message: str = "") -> StageRecord:
        started = self._open.pop(stage, time.perf_counter())
        record = StageRecord(stage=stage, status=status, elapsed_s=time.perf_counter() - started, message=message)
        self.records.append(record)
        logger.info("[%s] end %s: %s (%.2fs) %s", self.suite, stage, status, record.elapsed_s, message)
        return record


def _check_against_registry(suite: str, checks: List[CheckResult]) -> None:
    expected = set(VERIFY_SUITES[suite]["checks"])
    produced = {c.name for c in checks}
    missing, extra = expected - produced, produced - expected
    if missing or extra:
        raise RuntimeError(f"suite '{suite}' out of sync with registry (missing={sorted(missing)}, extra={sorted(extra)})")


def run_suite(
    suite: str,
    params: Optional[LameParams] = None,
    tolerances: Optional[Dict[str, float]] = None,
    seed: int = DEFAULT_SEED,
    nu: float = 0.9,
) -> SuiteReport:
    """
    verify 스위트 하나를 실행합니다.

    Args:
        suite: VERIFY_SUITES 의 키
        params: LameParams (기본 λ = μ = 1)
        tolerances: 병합된 허용오차 (기본 DEFAULT_TOLERANCES)
        seed: 프로브 샘플링 seed
        nu: jet 지수

    Returns:
        SuiteReport: passed 는 모든 검사가 통과했을 때만 True

    Raises:
        ValueError: 등록되지 않은 스위트
    """
    ok, reason = validate_suite(suite)
    if not ok:
        raise ValueError(reason)
    params = params or make_params(1.0, 1.0)
    tolerances = dict(tolerances or DEFAULT_TOLERANCES)
    ctx = SuiteContext(params=params, tolerances=tolerances, seed=seed, nu=nu)

    stages = StageLogger(suite, seed)
    checks: List[CheckResult] = []
    stages.begin("run_checks")
    try:
        checks = SUITE_FUNCTIONS[suite](ctx)
        _check_against_registry(suite, checks)
    except LameError as exc:
        stages.end("run_checks", status="error", message=f"{type(exc).__name__}: {exc}")
        return SuiteReport(suite=suite, seed=seed, passed=False, checks=checks, stages=stages.records,
                           tolerances=tolerances)
    failed = [c.name for c in checks if not c.passed]
    stages.end("run_checks", status="failed" if failed else "ok",
               message=f"{len(checks) - len(failed)}/{len(checks)} passed")

    return SuiteReport(suite=suite, seed=seed, passed=not failed, checks=checks, stages=stages.records,
                       tolerances=tolerances)


def write_report(report: SuiteReport, out_dir: str | Path) -> tuple[Path, Path]:
    """검사 결과와 stage 기록을 각각 JSON 으로 씁니다."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    report_path = out / f"{report.suite}_report.json"
    stages_path = out / f"{report.suite}_stages.json"
    payload = report.model_dump(mode="json", exclude={"stages"})
    report_path.write_text(json.dumps(payload, indent=2, sort_keys=True), encoding="utf-8")
    stages_path.write_text(
        json.dumps([s.model_dump(mode="json") for s in report.stages], indent=2), encoding="utf-8"
    )
    return report_path, stages_path
