"""
whitney/extension.py
============================================================
Whitney jet 의 C^{1,ν} 확장 f̃ (compact support)

구성:
- 배경 다항식 G (whitney/background.py) 를 jet 에 최소제곱으로 맞추고,
  잔차 jet r = jet − (G, ∂zG, ∂z̄G) 만 Whitney 방식으로 blend 합니다.
  f̃ = χ · (G + B_r)
- γ 여집합의 Whitney 정사각형 Q (루트 박스는 지지 원판을 포함)
- Q 마다 잔차 다항식 P_Q(z) = r0(τ*) + (z−τ*)r1(τ*) + conj(z−τ*)r2(τ*)
  τ* 는 Q 중심에서 가장 가까운 꼭짓점 (cKDTree)
- bump ψ_Q(z) = b(tx)·b(ty), t = (좌표 − 중심)/side, b(t) = (1 − (t/a)²)³ (|t| < a)
  a = EXTENSION_BUMP_HALF_WIDTH (기본 3/4 → 한 변의 1/4 만큼 겹침)
- 분할: φ_Q = ψ_Q / (S + h(S)), S = Σψ_Q, h(S) = (1 − S/s_min)³₊, s_min = b(1/2)²
  정사각형으로 덮인 곳은 S ≥ s_min 이라 h = 0, Σφ_Q = 1 입니다.
  덮이지 않은 얇은 collar 에서는 가중치 h 를 collar 다항식 Q_c 에 줍니다.
  Q_c 는 꼭짓점 가우시안 exp(−|z−τ_k|²/σ_k²) 로 잔차 다항식을 섞은 것이고,
  σ_k = (가장 가까운 다른 꼭짓점까지 거리) / EXTENSION_COLLAR_SIGMA_RATIO 입니다.
  꼭짓점에서는 S = 0, h = 1 이고 다른 꼭짓점 가중치가 e^{-36} 이하라 trace 가 정확합니다.
- compact support: 중심 c0 기준 반지름 R1 = 1.5·rad 부터 R2 = 2·rad 까지
  C² smoothstep 으로 0 으로 줄입니다.

미분:
- 값, 1계, 2계 도함수를 모두 해석적으로(몫의 미분) 계산합니다.
- 그래서 Extension.as_field() 는 정확한 2계 Wirtinger 도함수를 가진 ClosedFormField 입니다.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Optional

import numpy as np
from scipy.spatial import cKDTree

from config import (
    DEFAULT_EXTENSION_DEPTH,
    EXTENSION_BACKGROUND_DEGREE,
    EXTENSION_BUMP_HALF_WIDTH,
    EXTENSION_COLLAR_NEIGHBORS,
    EXTENSION_COLLAR_SIGMA_RATIO,
    JET_ALL_PAIRS_MAX_VERTICES,
)
from elasticity.fields import ClosedFormField
from errors import JetInvalidError
from geometry.decomposition import DomainDecomposition, whitney_decompose
from schemas.reports import JetReport
from whitney.background import BackgroundPolynomial, fit_background
from whitney.jet import WhitneyJet, check_jet

logger = logging.getLogger(__name__)

_EVAL_CHUNK = 20_000


class ExtensionValues(NamedTuple):
    value: np.ndarray
    dz: np.ndarray
    dzbar: np.ndarray
    dz_dz: np.ndarray
    dz_dzbar: np.ndarray
    dzbar_dzbar: np.ndarray


# ============================================================
# 1차원 bump 와 cutoff
# ============================================================
def _bump(t: np.ndarray, a: float) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """b, b', b'' (t 에 대한 미분)"""
    u = (t / a) ** 2
    inside = u < 1.0
    one_u = np.where(inside, 1.0 - u, 0.0)
    b = one_u**3
    b1 = -6.0 * t / (a * a) * one_u**2
    b2 = 6.0 * one_u / (a * a) * (5.0 * u - 1.0)
    return b, np.where(inside, b1, 0.0), np.where(inside, b2, 0.0)


def _cutoff(r: np.ndarray, r1: float, r2: float) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """χ(r), χ'(r), χ''(r). r ≤ R1 에서 1, r ≥ R2 에서 0 (C²)"""
    width = r2 - r1
    u = np.clip((r - r1) / width, 0.0, 1.0)
    chi = 1.0 - (10.0 * u**3 - 15.0 * u**4 + 6.0 * u**5)
    d1 = -30.0 * u**2 * (1.0 - u) ** 2 / width
    d2 = -60.0 * u * (1.0 - u) * (1.0 - 2.0 * u) / width**2
    return chi, d1, d2


def _quotient(num: tuple, den: tuple) -> tuple[np.ndarray, ...]:
    """(N, Nx, Ny, Nxx, Nxy, Nyy) / (D, ...) 의 값과 편미분"""
    N, Nx, Ny, Nxx, Nxy, Nyy = num
    D, Dx, Dy, Dxx, Dxy, Dyy = den
    B = N / D
    Bx = (Nx - B * Dx) / D
    By = (Ny - B * Dy) / D
    Bxx = (Nxx - 2.0 * Bx * Dx - B * Dxx) / D
    Bxy = (Nxy - Bx * Dy - By * Dx - B * Dxy) / D
    Byy = (Nyy - 2.0 * By * Dy - B * Dyy) / D
    return B, Bx, By, Bxx, Bxy, Byy


@dataclass(frozen=True, eq=False)
class Extension:
    jet: WhitneyJet
    decomposition: DomainDecomposition
    center: complex
    inner_radius: float
    support_radius: float
    background: BackgroundPolynomial
    bump_half_width: float = EXTENSION_BUMP_HALF_WIDTH

    # ------------------------------------------------------------
    # 정사각형 / 꼭짓점별 정보 (한 번만 계산)
    # ------------------------------------------------------------
    @cached_property
    def _vertex_tree(self) -> cKDTree:
        v = self.jet.curve.vertices
        return cKDTree(np.column_stack([v.real, v.imag]))

    @cached_property
    def _anchors(self) -> np.ndarray:
        c = self.decomposition.centers
        _, idx = self._vertex_tree.query(np.column_stack([c.real, c.imag]))
        return np.asarray(idx, dtype=np.int64)

    @cached_property
    def _level_trees(self) -> list[tuple[np.ndarray, float, cKDTree]]:
        d = self.decomposition
        out = []
        for depth in np.unique(d.depths):
            idx = np.flatnonzero(d.depths == depth)
            c = d.centers[idx]
            out.append((idx, float(d.sides[idx[0]]), cKDTree(np.column_stack([c.real, c.imag]))))
        return out

    @cached_property
    def residual_jet(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """꼭짓점에서 jet − 배경 다항식의 (값, ∂z, ∂z̄)"""
        g = self.background.evaluate_all(self.jet.curve.vertices)
        return self.jet.f0 - g.value, self.jet.f1 - g.dz, self.jet.f2 - g.dzbar

    @cached_property
    def _collar_sigma(self) -> np.ndarray:
        v = self.jet.curve.vertices
        dist, _ = self._vertex_tree.query(np.column_stack([v.real, v.imag]), k=2)
        return np.maximum(dist[:, 1], np.finfo(float).tiny) / EXTENSION_COLLAR_SIGMA_RATIO

    @property
    def s_min(self) -> float:
        b, _, _ = _bump(np.array(0.5), self.bump_half_width)
        return float(b) ** 2

    @property
    def n_squares(self) -> int:
        return self.decomposition.n_squares

    # ------------------------------------------------------------
    # 평가
    # ------------------------------------------------------------
    def _pairs(self, z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """(점 인덱스, 정사각형 인덱스): 점이 bump 지지 안에 있는 쌍"""
        xy = np.column_stack([z.real, z.imag])
        pts, sqs = [], []
        for idx, side, tree in self._level_trees:
            hits = tree.query_ball_point(xy, r=self.bump_half_width * side, p=np.inf)
            lens = np.fromiter((len(h) for h in hits), dtype=np.int64, count=len(hits))
            if lens.sum() == 0:
                continue
            pts.append(np.repeat(np.arange(z.size), lens))
            sqs.append(idx[np.concatenate([np.asarray(h, dtype=np.int64) for h in hits if h])])
        if not pts:
            return np.empty(0, dtype=np.int64), np.empty(0, dtype=np.int64)
        return np.concatenate(pts), np.concatenate(sqs)

    def _bump_sums(self, z: np.ndarray):
        """S = Σψ_Q 와 편미분, 그리고 잔차 다항식을 곱한 합 N"""
        n = z.size
        a = self.bump_half_width
        r0, r1, r2 = self.residual_jet
        p_idx, q_idx = self._pairs(z)

        side = self.decomposition.sides[q_idx]
        cq = self.decomposition.centers[q_idx]
        zp = z[p_idx]
        bx, bx1, bx2 = _bump((zp.real - cq.real) / side, a)
        by, by1, by2 = _bump((zp.imag - cq.imag) / side, a)
        psi = bx * by
        psi_x, psi_y = bx1 * by / side, bx * by1 / side
        psi_xx, psi_xy, psi_yy = bx2 * by / side**2, bx1 * by1 / side**2, bx * by2 / side**2

        anchor = self._anchors[q_idx]
        w = zp - self.jet.curve.vertices[anchor]
        P = r0[anchor] + w * r1[anchor] + np.conj(w) * r2[anchor]
        Px = r1[anchor] + r2[anchor]
        Py = 1j * (r1[anchor] - r2[anchor])

        def acc(vals):
            vals = np.asarray(vals)
            if np.iscomplexobj(vals):
                return np.bincount(p_idx, vals.real, n) + 1j * np.bincount(p_idx, vals.imag, n)
            return np.bincount(p_idx, vals, n)

        S = (acc(psi), acc(psi_x), acc(psi_y), acc(psi_xx), acc(psi_xy), acc(psi_yy))
        N = (
            acc(psi * P),
            acc(psi_x * P + psi * Px),
            acc(psi_y * P + psi * Py),
            acc(psi_xx * P + 2.0 * psi_x * Px),
            acc(psi_xy * P + psi_x * Py + psi_y * Px),
            acc(psi_yy * P + 2.0 * psi_y * Py),
        )
        return S, N

    def _collar_weight(self, S: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """h(S), h'(S), h''(S). S ≥ s_min 에서 0"""
        s_min = self.s_min
        u = np.clip(1.0 - S / s_min, 0.0, 1.0)
        return u**3, -3.0 * u**2 / s_min, 6.0 * u / s_min**2

    def _collar_polynomial(self, z: np.ndarray) -> tuple[np.ndarray, ...]:
        """꼭짓점 가우시안으로 섞은 잔차 다항식 Q_c 와 편미분"""
        r0, r1, r2 = self.residual_jet
        v = self.jet.curve.vertices
        m = min(EXTENSION_COLLAR_NEIGHBORS, v.size)
        _, nb = self._vertex_tree.query(np.column_stack([z.real, z.imag]), k=m)
        nb = np.asarray(nb, dtype=np.int64).reshape(z.size, m)

        t = v[nb]
        s2 = self._collar_sigma[nb] ** 2
        dx = z.real[:, None] - t.real
        dy = z.imag[:, None] - t.imag
        e = (dx * dx + dy * dy) / s2
        g = np.exp(-(e - e.min(axis=1, keepdims=True)))
        gx, gy = -2.0 * dx / s2 * g, -2.0 * dy / s2 * g
        gxx = (4.0 * dx * dx / s2 - 2.0) / s2 * g
        gxy = 4.0 * dx * dy / s2**2 * g
        gyy = (4.0 * dy * dy / s2 - 2.0) / s2 * g

        w = z[:, None] - t
        P = r0[nb] + w * r1[nb] + np.conj(w) * r2[nb]
        Px = r1[nb] + r2[nb]
        Py = 1j * (r1[nb] - r2[nb])
        num = (
            (g * P).sum(axis=1),
            (gx * P + g * Px).sum(axis=1),
            (gy * P + g * Py).sum(axis=1),
            (gxx * P + 2.0 * gx * Px).sum(axis=1),
            (gxy * P + gx * Py + gy * Px).sum(axis=1),
            (gyy * P + 2.0 * gy * Py).sum(axis=1),
        )
        den = tuple(arr.sum(axis=1) for arr in (g, gx, gy, gxx, gxy, gyy))
        return _quotient(num, den)

    def _blend(self, z: np.ndarray) -> tuple[np.ndarray, ...]:
        """cutoff 전 잔차 blend B_r 와 x, y 편미분 (B, Bx, By, Bxx, Bxy, Byy)"""
        S, N = self._bump_sums(z)
        h, h1, h2 = self._collar_weight(S[0])
        _, Sx, Sy, Sxx, Sxy, Syy = S
        H = (h, h1 * Sx, h1 * Sy, h2 * Sx * Sx + h1 * Sxx, h2 * Sx * Sy + h1 * Sxy, h2 * Sy * Sy + h1 * Syy)
        den = tuple(s + hh for s, hh in zip(S, H))
        num = [np.asarray(x, dtype=complex).copy() for x in N]

        k = np.flatnonzero(h > 0.0)
        if k.size:
            Q, Qx, Qy, Qxx, Qxy, Qyy = self._collar_polynomial(z[k])
            hk = [x[k] for x in H]
            num[0][k] += hk[0] * Q
            num[1][k] += hk[1] * Q + hk[0] * Qx
            num[2][k] += hk[2] * Q + hk[0] * Qy
            num[3][k] += hk[3] * Q + 2.0 * hk[1] * Qx + hk[0] * Qxx
            num[4][k] += hk[4] * Q + hk[1] * Qy + hk[2] * Qx + hk[0] * Qxy
            num[5][k] += hk[5] * Q + 2.0 * hk[2] * Qy + hk[0] * Qyy
        return _quotient(tuple(num), den)

    def _evaluate_chunk(self, z: np.ndarray) -> ExtensionValues:
        out = np.zeros((6, z.size), dtype=complex)
        dz0 = z - self.center
        r = np.abs(dz0)
        live = r < self.support_radius
        if np.any(live):
            zl = z[live]
            B, Bx, By, Bxx, Bxy, Byy = self._blend(zl)
            g = self.background.evaluate_all(zl)
            B = B + g.value
            Bx = Bx + g.dz + g.dzbar
            By = By + 1j * (g.dz - g.dzbar)
            Bxx = Bxx + g.dz_dz + 2.0 * g.dz_dzbar + g.dzbar_dzbar
            Bxy = Bxy + 1j * (g.dz_dz - g.dzbar_dzbar)
            Byy = Byy - g.dz_dz + 2.0 * g.dz_dzbar - g.dzbar_dzbar

            chi, c1, c2 = _cutoff(r[live], self.inner_radius, self.support_radius)
            rl = np.where(r[live] > 0.0, r[live], 1.0)
            ex, ey = dz0[live].real / rl, dz0[live].imag / rl
            chi_x, chi_y = c1 * ex, c1 * ey
            chi_xx = c2 * ex * ex + c1 * (1.0 - ex * ex) / rl
            chi_yy = c2 * ey * ey + c1 * (1.0 - ey * ey) / rl
            chi_xy = c2 * ex * ey - c1 * ex * ey / rl

            F = chi * B
            Fx = chi_x * B + chi * Bx
            Fy = chi_y * B + chi * By
            Fxx = chi_xx * B + 2.0 * chi_x * Bx + chi * Bxx
            Fxy = chi_xy * B + chi_x * By + chi_y * Bx + chi * Bxy
            Fyy = chi_yy * B + 2.0 * chi_y * By + chi * Byy

            out[0, live] = F
            out[1, live] = 0.5 * (Fx - 1j * Fy)
            out[2, live] = 0.5 * (Fx + 1j * Fy)
            out[3, live] = 0.25 * (Fxx - Fyy - 2.0j * Fxy)
            out[4, live] = 0.25 * (Fxx + Fyy)
            out[5, live] = 0.25 * (Fxx - Fyy + 2.0j * Fxy)
        return ExtensionValues(*out)

    def evaluate_all(self, z) -> ExtensionValues:
        """값과 1·2계 Wirtinger 도함수를 한 번에 계산합니다."""
        zz = np.asarray(z, dtype=complex)
        flat = np.atleast_1d(zz).ravel()
        parts = [self._evaluate_chunk(flat[s:s + _EVAL_CHUNK]) for s in range(0, flat.size, _EVAL_CHUNK)]
        if not parts:
            parts = [self._evaluate_chunk(flat)]
        stacked = [np.concatenate([getattr(p, name) for p in parts]).reshape(zz.shape)
                   for name in ExtensionValues._fields]
        return ExtensionValues(*stacked)

    def evaluate(self, z):
        return self.evaluate_all(z).value

    def dz(self, z):
        return self.evaluate_all(z).dz

    def dzbar(self, z):
        return self.evaluate_all(z).dzbar

    def second_derivatives(self, z) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        vals = self.evaluate_all(z)
        return vals.dz_dz, vals.dz_dzbar, vals.dzbar_dzbar

    def __call__(self, z):
        return self.evaluate(z)

    def as_field(self) -> ClosedFormField:
        return ClosedFormField(
            value=self.evaluate,
            dz=self.dz,
            dzbar=self.dzbar,
            dz_dz=lambda z: self.evaluate_all(z).dz_dz,
            dz_dzbar=lambda z: self.evaluate_all(z).dz_dzbar,
            dzbar_dzbar=lambda z: self.evaluate_all(z).dzbar_dzbar,
            name=f"extension({self.jet.curve.label})",
        )

    # ------------------------------------------------------------
    # 진단
    # ------------------------------------------------------------
    def partition_of_unity(self, z) -> tuple[np.ndarray, np.ndarray]:
        """
        (Σ φ_Q(z), collar 가중치 h/(S + h)) 를 돌려줍니다.

        Note:
            - 정사각형으로 덮인 점에서는 Σ φ_Q = 1, collar 가중치 = 0 입니다.
            - 곡선 꼭짓점에서는 Σ φ_Q = 0 입니다.
        """
        zz = np.atleast_1d(np.asarray(z, dtype=complex)).ravel()
        S, _ = self._bump_sums(zz)
        h, _, _ = self._collar_weight(S[0])
        total = S[0] + h
        return S[0] / total, h / total


def partition_of_unity_sum(ext: Extension, z) -> np.ndarray:
    """정사각형 분할만의 합 Σ φ_Q(z)"""
    phi_sum, _ = ext.partition_of_unity(z)
    return phi_sum


def extend(
    jet: WhitneyJet,
    depth: int = DEFAULT_EXTENSION_DEPTH,
    report: Optional[JetReport] = None,
    check: bool = True,
    background_degree: int = EXTENSION_BACKGROUND_DEGREE,
) -> Extension:
    """
    jet 의 Whitney 확장을 만듭니다.

    Args:
        jet: WhitneyJet
        depth: 여집합 Whitney 분해 깊이
        report: 이미 계산한 check_jet 결과 (없으면 새로 검사)
        check: False 면 호환성 검사를 건너뜁니다 (호출부가 이미 검사한 경우)
        background_degree: 배경 다항식 총차수 (0 이면 상수 배경)

    Returns:
        Extension

    Raises:
        JetInvalidError: check_jet 이 무효 판정할 때
    """
    if check:
        report = report or check_jet(jet, all_pairs_max=JET_ALL_PAIRS_MAX_VERTICES)
        if not report.valid:
            raise JetInvalidError(report.reason)

    curve = jet.curve
    xmin, ymin, xmax, ymax = curve.bbox
    center = complex(0.5 * (xmin + xmax), 0.5 * (ymin + ymax))
    rad = float(np.max(np.abs(curve.vertices - center)))
    r1, r2 = 1.5 * rad, 2.0 * rad
    decomp = whitney_decompose(curve, depth, region="complement", root=(center, 2.0 * r2 * 1.0625))
    background = fit_background(jet, background_degree)
    ext = Extension(jet=jet, decomposition=decomp, center=center, inner_radius=r1, support_radius=r2,
                    background=background)
    logger.info("whitney extension: %s squares=%d depth=%d support_radius=%.4g background_degree=%d",
                curve.label, decomp.n_squares, depth, r2, background_degree)
    return ext
