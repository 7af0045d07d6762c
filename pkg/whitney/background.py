"""
whitney/background.py
============================================================
jet 에 최소제곱으로 맞춘 배경 다항식 G(z)

설명:
- G(z) = Σ a_jk w^j conj(w)^k,  w = (z − c)/ρ,  j + k ≤ degree
- 꼭짓점마다 세 행 (값, ρ·∂z, ρ·∂z̄) 을 쌓고, dual 길이 가중치로 np.linalg.lstsq 를 풉니다.
- degree ≥ 2 이면 z, z̄ 의 2차 이하 필드에서 나온 jet 은 정확히 재현됩니다.

Note:
- 확장은 G + (잔차 jet 의 Whitney blend) 로 만듭니다.
  잔차가 작을수록 안쪽 정사각형 사이의 다항식 차이가 작아집니다.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from config import EXTENSION_BACKGROUND_DEGREE

logger = logging.getLogger(__name__)


class BackgroundValues(NamedTuple):
    value: np.ndarray
    dz: np.ndarray
    dzbar: np.ndarray
    dz_dz: np.ndarray
    dz_dzbar: np.ndarray
    dzbar_dzbar: np.ndarray


def _monomials(degree: int) -> np.ndarray:
    return np.array([(j, total - j) for total in range(degree + 1) for j in range(total, -1, -1)],
                    dtype=np.int64)


def _powers(w: np.ndarray, degree: int) -> list[np.ndarray]:
    out = [np.ones_like(w)]
    for _ in range(degree):
        out.append(out[-1] * w)
    return out


@dataclass(frozen=True, eq=False)
class BackgroundPolynomial:
    center: complex
    scale: float
    powers: np.ndarray
    coef: np.ndarray

    @property
    def degree(self) -> int:
        return int(self.powers.sum(axis=1).max()) if self.powers.size else 0

    def evaluate_all(self, z) -> BackgroundValues:
        """값과 1·2계 Wirtinger 도함수"""
        zz = np.asarray(z, dtype=complex)
        w = (zz - self.center) / self.scale
        n = self.degree
        pw, pwb = _powers(w, n), _powers(np.conj(w), n)
        zero = np.zeros_like(w)

        def term(j: int, k: int) -> np.ndarray:
            return pw[j] * pwb[k] if j >= 0 and k >= 0 else zero

        out = [np.zeros_like(w) for _ in range(6)]
        rho = self.scale
        for (j, k), a in zip(self.powers, self.coef):
            if a == 0:
                continue
            out[0] += a * term(j, k)
            out[1] += a * j * term(j - 1, k) / rho
            out[2] += a * k * term(j, k - 1) / rho
            out[3] += a * j * (j - 1) * term(j - 2, k) / rho**2
            out[4] += a * j * k * term(j - 1, k - 1) / rho**2
            out[5] += a * k * (k - 1) * term(j, k - 2) / rho**2
        return BackgroundValues(*out)

    def __call__(self, z):
        return self.evaluate_all(z).value


def fit_background(jet, degree: int = EXTENSION_BACKGROUND_DEGREE) -> BackgroundPolynomial:
    """
    jet (f0, f1, f2) 에 가장 가까운 degree 차 배경 다항식을 찾습니다.

    Args:
        jet: WhitneyJet
        degree: 총차수 (0 이면 상수)

    Returns:
        BackgroundPolynomial
    """
    curve = jet.curve
    v = curve.vertices
    xmin, ymin, xmax, ymax = curve.bbox
    center = complex(0.5 * (xmin + xmax), 0.5 * (ymin + ymax))
    rho = float(np.max(np.abs(v - center))) or 1.0
    powers = _monomials(max(int(degree), 0))

    w = (v - center) / rho
    top = int(powers.sum(axis=1).max())
    pw, pwb = _powers(w, top), _powers(np.conj(w), top)
    zero = np.zeros_like(w)
    val = np.column_stack([pw[j] * pwb[k] for j, k in powers])
    dz = np.column_stack([j * pw[j - 1] * pwb[k] if j else zero for j, k in powers])
    dzb = np.column_stack([k * pw[j] * pwb[k - 1] if k else zero for j, k in powers])

    lengths = curve.lengths
    dual = 0.5 * (lengths + np.roll(lengths, 1))
    sw = np.sqrt(dual / dual.sum())
    A = np.vstack([val, dz, dzb]) * np.tile(sw, 3)[:, None]
    b = np.concatenate([jet.f0, rho * jet.f1, rho * jet.f2]) * np.tile(sw, 3)
    coef, _, rank, _ = np.linalg.lstsq(A, b, rcond=None)
    misfit = float(np.linalg.norm(A @ coef - b))
    logger.debug("background fit: degree=%d terms=%d rank=%d misfit=%.3e",
                 degree, len(powers), rank, misfit)
    return BackgroundPolynomial(center=center, scale=rho, powers=powers, coef=np.asarray(coef, dtype=complex))
