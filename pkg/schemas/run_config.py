"""
schemas/run_config.py
============================================================
CLI 실행 설정 (RunConfig) 과 가벼운 파서들

설명:
- RunConfig 는 JSON 설정 파일(--config) 위에 명령행 플래그를 덮어써서 만듭니다.
- 허용오차는 DEFAULT_TOLERANCES → 파일의 "tolerances" → --tol NAME=VAL 순으로 덮어씁니다.
  모르는 허용오차 이름은 사용 오류입니다.
- 물리 상수는 validate_run_config 에서 make_params 로 먼저 검사합니다.

Note:
- 파서(parse_grid, parse_tolerance)는 실패하면 None 을 돌려줍니다.
- 검증기(validate_run_config)는 (bool, 이유) 튜플을 돌려줍니다.
"""

from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Any, Dict, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from config import DEFAULT_SEED, DEFAULT_TOLERANCES
from elasticity.params import LameParams, make_params
from errors import LameError

_GRID_RE = re.compile(r"^\s*(\d+)\s*[xX]\s*(\d+)\s*$")


class RunConfig(BaseModel):
    """
    명령 하나의 실행 설정.

    필드:
    - lam / mu: Lamé 상수 (JSON 키는 "lambda" 도 허용)
    - nu, d: jet 지수와 summability 지수
    - curve: "circle" / "koch" / "file"
    - grid: (nx, ny)
    - tolerances: 최종 병합된 허용오차
    """
    model_config = ConfigDict(populate_by_name=True, extra="forbid")

    lam: float = Field(1.0, alias="lambda")
    mu: float = 1.0
    nu: float = 0.9
    d: Optional[float] = None
    depth: int = 8
    segments: int = 256
    curve: Literal["circle", "koch", "file"] = "circle"
    radius: float = 1.0
    koch: int = 5
    curve_file: Optional[str] = None
    jet_file: Optional[str] = None
    field: str = "one"
    method: Literal["cauchy_transform", "whitney_teodorescu"] = "cauchy_transform"
    grid: Tuple[int, int] = (41, 41)
    out: str = "out"
    seed: int = DEFAULT_SEED
    tolerances: Dict[str, float] = Field(default_factory=lambda: dict(DEFAULT_TOLERANCES))

    def params(self) -> LameParams:
        return make_params(self.lam, self.mu)

    def out_dir(self) -> Path:
        path = Path(self.out)
        path.mkdir(parents=True, exist_ok=True)
        return path


def parse_grid(text: str) -> Optional[Tuple[int, int]]:
    """ "NxM" → (N, M). 실패하면 None."""
    if not isinstance(text, str):
        return None
    m = _GRID_RE.match(text)
    if not m:
        return None
    nx, ny = int(m.group(1)), int(m.group(2))
    if nx < 1 or ny < 1:
        return None
    return nx, ny


def parse_tolerance(item: str) -> Optional[Tuple[str, float]]:
    """ "NAME=VAL" → (NAME, VAL). 실패하면 None."""
    if not isinstance(item, str) or "=" not in item:
        return None
    name, _, raw = item.partition("=")
    name = name.strip()
    try:
        value = float(raw)
    except ValueError:
        return None
    if not name or value != value:
        return None
    return name, value


def merge_tolerances(*layers: Optional[Dict[str, float]]) -> Dict[str, float]:
    """
    DEFAULT_TOLERANCES 위에 layers 를 차례로 덮어씁니다.

    Raises:
        ValueError: 모르는 허용오차 이름
    """
    merged = dict(DEFAULT_TOLERANCES)
    for layer in layers:
        for name, value in (layer or {}).items():
            if name not in DEFAULT_TOLERANCES:
                raise ValueError(f"unknown tolerance '{name}' (known: {', '.join(sorted(DEFAULT_TOLERANCES))})")
            merged[name] = float(value)
    return merged


def load_run_config(
    config_path: Optional[str] = None,
    overrides: Optional[Dict[str, Any]] = None,
    tol_overrides: Optional[Dict[str, float]] = None,
) -> RunConfig:
    """
    설정 파일 + 플래그 → RunConfig

    Args:
        config_path: JSON 설정 파일 (없으면 기본값만)
        overrides: 플래그 값 (None 인 항목은 무시)
        tol_overrides: --tol 로 받은 허용오차

    Raises:
        ValueError: 파일/값이 잘못된 경우 (CLI 에서 exit 2)
    """
    data: Dict[str, Any] = {}
    if config_path:
        path = Path(config_path)
        if not path.is_file():
            raise ValueError(f"config file not found: {config_path}")
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise ValueError(f"config file is not valid JSON: {exc}") from exc
        if not isinstance(data, dict):
            raise ValueError("config file must hold a JSON object")

    file_tols = data.pop("tolerances", None)
    for key, value in (overrides or {}).items():
        if value is not None:
            data[key] = value
    if "lambda" in data and "lam" in data:
        data.pop("lambda")
    data["tolerances"] = merge_tolerances(file_tols, tol_overrides)
    try:
        return RunConfig.model_validate(data)
    except ValidationError as exc:
        raise ValueError(str(exc)) from exc


def validate_run_config(cfg: RunConfig) -> tuple[bool, str]:
    """
    계산 전에 설정을 검사합니다.

    Returns:
        (True, "ok") 또는 (False, 이유)
    """
    try:
        cfg.params()
    except LameError as exc:
        return False, str(exc)
    if not (0.0 < cfg.nu < 1.0):
        return False, f"nu must lie in (0, 1) (got {cfg.nu})"
    if cfg.d is not None and not (1.0 < cfg.d < 2.0):
        return False, f"d must lie in (1, 2) (got {cfg.d})"
    if cfg.depth < 1:
        return False, f"depth must be positive (got {cfg.depth})"
    if cfg.curve == "file" and not cfg.curve_file:
        return False, "curve 'file' needs --curve-file"
    return True, "ok"
