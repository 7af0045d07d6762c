"""cli 패키지
============================================================
argparse 기반 명령행 도구 (geometry, jet, teodorescu, cauchy-transform, solve, verify).

주요 모듈:
- main.py: build_parser, 서브커맨드 함수, main (종료 코드 0/1/2)
"""

from .main import build_parser, main

__all__ = ["build_parser", "main"]
