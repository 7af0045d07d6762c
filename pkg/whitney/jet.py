"""
whitney/jet.py
============================================================
Whitney jet {f0, f1, f2} 과 Lip(1+ν, γ) 호환성 검사

설명:
- jet 은 곡선 꼭짓점마다 (f0, f1, f2) = (값, ∂z, ∂z̄) 를 가집니다.
- 호환성 조건 (모든 꼭짓점 쌍 t, τ):
    |f0(t) − f0(τ) − (t−τ)f1(τ) − conj(t−τ)f2(τ)| ≤ c|t−τ|^{1+ν}
    |f1(t) − f1(τ)| ≤ c|t−τ|^ν,   |f2(t) − f2(τ)| ≤ c|t−τ|^ν
- check_jet 은 꼭짓점 2000개 이하면 모든 순서쌍, 그보다 많으면 시드 고정 무작위 쌍을 검사합니다.
- 유한한 c 가 없다는 신호: 간격이 줄수록 최대 비율이 커짐 (log-log 기울기 < −JET_SCALING_SLOPE_TOL)

CSV 형식:
- 헤더 `x,y,f0_re,f0_im,f1_re,f1_im,f2_re,f2_im`, 곡선 꼭짓점 순서와 같음
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Optional

import numpy as np

from config import DEFAULT_SEED, JET_ALL_PAIRS_MAX_VERTICES, JET_RANDOM_PAIRS, JET_SCALING_SLOPE_TOL
from elasticity.fields import ClosedFormField
from errors import BadDiscretizationError, MissingDerivativeError
from geometry.curve import Curve, _shoelace
from schemas.reports import JetReport

logger = logging.getLogger(__name__)

JET_CSV_HEADER = "x,y,f0_re,f0_im,f1_re,f1_im,f2_re,f2_im"
_PAIR_BLOCK = 500_000
_N_BINS = 24


@dataclass(frozen=True, eq=False)
class WhitneyJet:
    curve: Curve
    f0: np.ndarray
    f1: np.ndarray
    f2: np.ndarray
    nu: float
    lip_constant: Optional[float] = None

    def __post_init__(self):
        n = self.curve.n_segments
        for name in ("f0", "f1", "f2"):
            arr = np.broadcast_to(np.asarray(getattr(self, name), dtype=complex), (n,)).copy()
            object.__setattr__(self, name, arr)
        if not (0.0 < self.nu < 1.0):
            raise ValueError(f"nu must lie in (0, 1) (got {self.nu})")

    def is_zero(self) -> bool:
        return not (np.any(self.f0) or np.any(self.f1) or np.any(self.f2))

    def describe(self) -> dict:
        return {
            "curve": self.curve.label,
            "n_vertices": self.curve.n_segments,
            "nu": self.nu,
            "lip_constant": self.lip_constant,
        }

    # ============================================================
    # CSV 입출력
    # ============================================================
    def to_csv(self, path: str | Path) -> None:
        v = self.curve.vertices
        cols = [v.real, v.imag]
        for f in (self.f0, self.f1, self.f2):
            cols += [f.real, f.imag]
        np.savetxt(Path(path), np.column_stack(cols), delimiter=",", header=JET_CSV_HEADER,
                   comments="", fmt="%.17g")

    @classmethod
    def from_csv(cls, path: str | Path, nu: float, lip_constant: Optional[float] = None) -> "WhitneyJet":
        """
        jet CSV 를 읽습니다.

        Note:
            - 꼭짓점이 시계 방향이면 곡선과 jet 값을 함께 뒤집습니다.
        """
        path = Path(path)
        with path.open("r", encoding="utf-8") as fh:
            header = fh.readline().strip().replace(" ", "")
        if header != JET_CSV_HEADER:
            raise BadDiscretizationError(f"{path}: expected header '{JET_CSV_HEADER}'")
        data = np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)
        if data.shape[1] != 8:
            raise BadDiscretizationError(f"{path}: expected 8 columns (got {data.shape[1]})")
        if _shoelace(data[:, 0] + 1j * data[:, 1]) < 0:
            data = data[::-1]
        z = data[:, 0] + 1j * data[:, 1]
        curve = Curve(z, label=path.stem)
        return cls(
            curve=curve,
            f0=data[:, 2] + 1j * data[:, 3],
            f1=data[:, 4] + 1j * data[:, 5],
            f2=data[:, 6] + 1j * data[:, 7],
            nu=nu,
            lip_constant=lip_constant,
        )


def jet_from_field(
    field: ClosedFormField,
    curve: Curve,
    nu: float,
    lip_constant: Optional[float] = None,
) -> WhitneyJet:
    """
    전역 필드의 trace 로 jet 을 만듭니다: f0 = F|γ, f1 = ∂z F|γ, f2 = ∂z̄ F|γ

    Args:
        field: dz, dzbar 를 가진 ClosedFormField
        curve: 곡선
        nu: Hölder 지수 ν ∈ (0, 1)
    """
    if field.dz is None or field.dzbar is None:
        raise MissingDerivativeError(f"field '{field.name}' needs exact first derivatives to build a jet")
    t = curve.vertices
    return WhitneyJet(curve, field.value(t), field.dz(t), field.dzbar(t), nu, lip_constant)


def constant_jet(curve: Curve, c: complex, nu: float) -> WhitneyJet:
    return WhitneyJet(curve, np.full(curve.n_segments, complex(c)), 0.0, 0.0, nu)


# ============================================================
# 호환성 검사
# ============================================================
def _pair_blocks(n: int, seed: int, all_pairs_max: int, n_random: int) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    if n <= all_pairs_max:
        rows_per_block = max(1, _PAIR_BLOCK // n)
        cols = np.arange(n)
        for start in range(0, n, rows_per_block):
            rows = np.arange(start, min(start + rows_per_block, n))
            i = np.repeat(rows, n)
            j = np.tile(cols, rows.size)
            keep = i != j
            yield i[keep], j[keep]
        return
    rng = np.random.default_rng(seed)
    remaining = n_random
    while remaining > 0:
        m = min(remaining, _PAIR_BLOCK)
        i = rng.integers(0, n, m)
        j = rng.integers(0, n, m)
        keep = i != j
        yield i[keep], j[keep]
        remaining -= m


def check_jet(
    jet: WhitneyJet,
    seed: int = DEFAULT_SEED,
    all_pairs_max: int = JET_ALL_PAIRS_MAX_VERTICES,
    n_random: int = JET_RANDOM_PAIRS,
) -> JetReport:
    """
    jet 의 Lip(1+ν, γ) 조건을 검사합니다.

    Returns:
        JetReport: c_min 은 샘플된 쌍에서 세 부등식 비율의 최댓값

    Note:
        - lip_constant 가 주어졌으면 c_min > lip_constant 일 때 무효입니다.
        - lip_constant 가 없으면 스케일링 기울기로만 판정합니다.
    """
    t = jet.curve.vertices
    n = t.size
    nu = jet.nu
    sampled = n > all_pairs_max

    seps_all = jet.curve.lengths
    lo = max(float(seps_all.min()) * 0.5, 1e-300)
    hi = jet.curve.nominal_diameter * 1.0001
    edges = np.geomspace(lo, hi, _N_BINS + 1)
    bin_max = np.zeros(_N_BINS)

    c_min, worst, worst_sep, n_pairs = 0.0, None, None, 0
    for i, j in _pair_blocks(n, seed, all_pairs_max, n_random):
        w = t[i] - t[j]
        r = np.abs(w)
        rem0 = jet.f0[i] - jet.f0[j] - w * jet.f1[j] - np.conj(w) * jet.f2[j]
        ratio = np.maximum.reduce([
            np.abs(rem0) / r ** (1.0 + nu),
            np.abs(jet.f1[i] - jet.f1[j]) / r**nu,
            np.abs(jet.f2[i] - jet.f2[j]) / r**nu,
        ])
        n_pairs += int(i.size)
        k = int(np.argmax(ratio))
        if ratio[k] > c_min:
            c_min, worst, worst_sep = float(ratio[k]), [int(i[k]), int(j[k])], float(r[k])
        b = np.clip(np.searchsorted(edges, r) - 1, 0, _N_BINS - 1)
        np.maximum.at(bin_max, b, ratio)

    slope = None
    populated = np.flatnonzero(bin_max > 0.0)
    if populated.size >= 3:
        small = populated[: max(2, populated.size // 2)]
        centers = np.sqrt(edges[small] * edges[small + 1])
        slope = float(np.polyfit(np.log(centers), np.log(bin_max[small]), 1)[0])

    valid, reason = True, "ok"
    if jet.lip_constant is not None and c_min > jet.lip_constant:
        valid, reason = False, f"measured constant {c_min:.4g} exceeds lip_constant {jet.lip_constant:.4g}"
    elif slope is not None and slope < -JET_SCALING_SLOPE_TOL:
        valid, reason = False, f"pair ratio grows as separation shrinks (log-log slope {slope:.3f})"

    report = JetReport(
        valid=valid,
        c_min=c_min,
        nu=nu,
        n_vertices=n,
        n_pairs=n_pairs,
        sampled=sampled,
        scaling_slope=slope,
        worst_pair=worst,
        worst_separation=worst_sep,
        lip_constant=jet.lip_constant,
        reason=reason,
    )
    logger.info("check_jet: valid=%s c_min=%.4g slope=%s pairs=%d", valid, c_min, slope, n_pairs)
    return report
