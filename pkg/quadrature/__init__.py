"""quadrature 패키지
============================================================
경계 적분과 영역 적분 엔진 (네 가지 커널: cauchy, conj_cauchy, ratio, log_modulus)

주요 모듈:
- kernels.py: Kernel / Measure 열거형, 직사각형 셀 위 정확한 커널 적분
- contour.py: ContourIntegrand, contour_integral (경계 근접 가드 포함)
- area.py: AreaRule, build_area_rule, uniform_grid_rule, area_integral,
  wirtinger_of_area_potential
"""

from .kernels import Kernel, Measure, kernel_value, rect_kernel_integral
from .contour import ContourIntegrand, contour_integral, cauchy_integral, conj_cauchy_integral
from .area import (
    AreaRule,
    AreaIntegrand,
    build_area_rule,
    uniform_grid_rule,
    area_integral,
    cauchy_area_potential,
    wirtinger_of_area_potential,
)

__all__ = [
    "Kernel",
    "Measure",
    "kernel_value",
    "rect_kernel_integral",
    "ContourIntegrand",
    "contour_integral",
    "cauchy_integral",
    "conj_cauchy_integral",
    "AreaRule",
    "AreaIntegrand",
    "build_area_rule",
    "uniform_grid_rule",
    "area_integral",
    "cauchy_area_potential",
    "wirtinger_of_area_potential",
]
