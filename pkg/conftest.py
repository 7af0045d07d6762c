"""
conftest.py
============================================================
저장소 루트를 sys.path 에 올려서 test/ 에서 `from geometry...` 처럼 import 할 수 있게 합니다.
"""

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))
