"""verification 패키지
============================================================
verify 명령의 스위트 구현과 실행기.

주요 모듈:
- suites.py: SuiteContext, 스위트 함수 7개, SUITE_FUNCTIONS
- runner.py: StageLogger, run_suite, write_report
"""

from .suites import SUITE_FUNCTIONS, SuiteContext
from .runner import StageLogger, run_suite, write_report

__all__ = ["SUITE_FUNCTIONS", "SuiteContext", "StageLogger", "run_suite", "write_report"]
