"""
main.py
============================================================
명령행 진입점 (python main.py <subcommand> ...)

자세한 사용법은 docs/commands.md 또는 `python main.py --help` 를 참고하세요.
"""

import sys

from cli.main import main

if __name__ == "__main__":
    sys.exit(main())
