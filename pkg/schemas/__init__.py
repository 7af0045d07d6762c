"""schemas 패키지
============================================================
실행 설정과 JSON 리포트용 Pydantic 스키마.

주요 스키마:
- run_config.py: RunConfig, parse_grid, parse_tolerance, load_run_config, validate_run_config
- reports.py: JetReport, CheckResult, StageRecord, SuiteReport, GrowthReport, SolutionMetadata

특징:
- 모든 스키마는 Pydantic BaseModel 상속
- model_dump_json 으로 그대로 파일에 씁니다
"""

from .reports import CheckResult, GrowthReport, JetReport, SolutionMetadata, StageRecord, SuiteReport
from .run_config import (
    RunConfig,
    load_run_config,
    merge_tolerances,
    parse_grid,
    parse_tolerance,
    validate_run_config,
)

__all__ = [
    "CheckResult",
    "GrowthReport",
    "JetReport",
    "SolutionMetadata",
    "StageRecord",
    "SuiteReport",
    "RunConfig",
    "load_run_config",
    "merge_tolerances",
    "parse_grid",
    "parse_tolerance",
    "validate_run_config",
]
