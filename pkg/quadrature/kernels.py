"""
quadrature/kernels.py
============================================================
네 가지 커널과 직사각형 셀 위의 정확한 커널 적분

커널 (w = ξ − z):
- cauchy       : 1/w
- conj_cauchy  : 1/conj(w)
- ratio        : w/conj(w) = e^{2iθ}
- log_modulus  : ln|w|²  (실수, 2·ln|w| 로 계산. 복소 로그 branch 를 쓰지 않음)

셀 적분:
- z 기준 상대 좌표 (u, v) 의 직사각형 [u1,u2]×[v1,v2] 위에서
  ∂u∂v F = K 인 원시함수 F 의 네 꼭짓점 차분으로 정확히 적분합니다.
    log   : F = uv(ln r² − 3) + u²·atan(v/u) + v²·atan(u/v)
    ratio : F = u²·atan(v/u) − v²·atan(u/v) + i·½ r² ln r²
    cauchy: F = u·atan(v/u) + ½ v ln r² − i·(v·atan(u/v) + ½ u ln r²)
- u = 0, v = 0, r = 0 에서는 각 항의 극한(0)을 씁니다.
- 결과는 z 에 대해 C¹ 이라서 area potential 의 유한차분이 의미를 가집니다.
"""

from __future__ import annotations

from enum import Enum

import numpy as np


class Kernel(str, Enum):
    CAUCHY = "cauchy"
    CONJ_CAUCHY = "conj_cauchy"
    RATIO = "ratio"
    LOG_MODULUS = "log_modulus"


class Measure(str, Enum):
    DXI = "dxi"
    DXI_BAR = "dxi_bar"


def kernel_value(kernel: Kernel, w: np.ndarray) -> np.ndarray:
    """점별 커널 값 K(w)"""
    w = np.asarray(w, dtype=complex)
    kernel = Kernel(kernel)
    if kernel is Kernel.CAUCHY:
        return 1.0 / w
    if kernel is Kernel.CONJ_CAUCHY:
        return 1.0 / np.conj(w)
    if kernel is Kernel.RATIO:
        return w / np.conj(w)
    return (2.0 * np.log(np.abs(w))).astype(complex)


# ============================================================
# 안전한 보조 함수 (0 에서의 극한 처리)
# ============================================================
def _x_atan(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """x·atan(y/x), x = 0 이면 0"""
    ratio = np.divide(y, x, out=np.zeros_like(x), where=x != 0.0)
    return x * np.arctan(ratio)


def _x_log(x: np.ndarray, r2: np.ndarray) -> np.ndarray:
    """x·ln r², r = 0 이면 0"""
    logr2 = np.log(r2, out=np.zeros_like(r2), where=r2 > 0.0)
    return x * logr2


def _antiderivative(kernel: Kernel, u: np.ndarray, v: np.ndarray) -> np.ndarray:
    r2 = u * u + v * v
    if kernel is Kernel.LOG_MODULUS:
        return (_x_log(u * v, r2) - 3.0 * u * v + u * _x_atan(u, v) + v * _x_atan(v, u)).astype(complex)
    if kernel is Kernel.RATIO:
        return (u * _x_atan(u, v) - v * _x_atan(v, u)) + 0.5j * _x_log(r2, r2)
    # cauchy (conj_cauchy 는 호출부에서 켤레)
    return (_x_atan(u, v) + 0.5 * _x_log(v, r2)) - 1j * (_x_atan(v, u) + 0.5 * _x_log(u, r2))


def rect_kernel_integral(
    kernel: Kernel,
    u1: np.ndarray,
    u2: np.ndarray,
    v1: np.ndarray,
    v2: np.ndarray,
) -> np.ndarray:
    """
    ∫_{v1}^{v2} ∫_{u1}^{u2} K(u + iv) du dv  (정확한 값, broadcast)

    Args:
        kernel: Kernel
        u1, u2, v1, v2: z 기준 상대 좌표의 직사각형 경계

    Returns:
        np.ndarray (complex)
    """
    kernel = Kernel(kernel)
    base = Kernel.CAUCHY if kernel is Kernel.CONJ_CAUCHY else kernel
    u1, u2, v1, v2 = np.broadcast_arrays(*(np.asarray(a, dtype=float) for a in (u1, u2, v1, v2)))
    out = (
        _antiderivative(base, u2, v2)
        - _antiderivative(base, u1, v2)
        - _antiderivative(base, u2, v1)
        + _antiderivative(base, u1, v1)
    )
    # ∫ 1/conj(w) dA = conj(∫ 1/w dA) (면적 요소는 실수)
    return np.conj(out) if kernel is Kernel.CONJ_CAUCHY else out
