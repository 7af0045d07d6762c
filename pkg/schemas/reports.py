"""
schemas/reports.py
============================================================
검증 결과 / 해 메타데이터를 JSON 으로 내보내기 위한 Pydantic 스키마.

설명:
- JetReport: check_jet 결과 (유효 여부, 최소 Lip 상수, 스케일링 기울기)
- CheckResult: verify 스위트의 개별 검사 한 건 (측정값, 허용오차, 통과 여부, 근거 문구)
- SuiteReport: 스위트 전체 결과 (stage 기록 포함)
- GrowthReport: 무한대 근처 성장 검사 결과
- SolutionMetadata: solve 명령의 JSON 출력
"""

from __future__ import annotations

from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field


class JetReport(BaseModel):
    """
    Whitney jet 호환성 검사 결과.

    필드:
    - valid: Lip(1+ν, γ) 판정
    - c_min: 샘플된 쌍에서 측정한 최소 허용 상수
    - scaling_slope: 간격 구간별 최대 비율의 log-log 기울기 (작은 간격 쪽 절반)
    """
    valid: bool
    c_min: float
    nu: float
    n_vertices: int
    n_pairs: int
    sampled: bool = False
    scaling_slope: Optional[float] = None
    worst_pair: Optional[List[int]] = None
    worst_separation: Optional[float] = None
    lip_constant: Optional[float] = None
    reason: str = "ok"


class CheckResult(BaseModel):
    """
    verify 검사 한 건.

    필드:
    - name: 검사 이름 (레지스트리 키)
    - value: 측정값
    - tolerance: 허용오차 (None 이면 정보용)
    - passed: 통과 여부
    - anchor: 근거가 되는 항등식/정리 문구
    """
    name: str
    value: float
    tolerance: Optional[float] = None
    passed: bool
    anchor: str = ""
    detail: Dict[str, Any] = Field(default_factory=dict)


class StageRecord(BaseModel):
    stage: str
    status: Literal["ok", "failed", "error"]
    elapsed_s: float
    message: str = ""


class SuiteReport(BaseModel):
    suite: str
    seed: int
    passed: bool
    checks: List[CheckResult] = Field(default_factory=list)
    stages: List[StageRecord] = Field(default_factory=list)
    tolerances: Dict[str, float] = Field(default_factory=dict)


class GrowthReport(BaseModel):
    """
    큰 반지름에서의 성장 검사.

    필드:
    - ratios: 반지름별 max|F| / ln R
    - dz_max: 반지름별 max|∂z F|
    - potential_max: 반지름별 max|α conj(∂z F) + β ∂z F|
    """
    radii: List[float]
    ratios: List[float]
    dz_max: List[float]
    potential_max: List[float]
    bounded: bool
    decaying: bool


class SolutionMetadata(BaseModel):
    method: Literal["cauchy_transform", "whitney_teodorescu"]
    params: Dict[str, float]
    jet: Dict[str, Any]
    certificate: Dict[str, Any] = Field(default_factory=dict)
    probe_residuals: Dict[str, Any] = Field(default_factory=dict)
    growth: Optional[GrowthReport] = None
