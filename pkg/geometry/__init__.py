"""geometry 패키지
============================================================
경계 곡선, 점 포함 판정, box counting, Whitney 분해를 다룹니다.

주요 모듈:
- curve.py: Curve (닫힌 양의 방향 polyline), contains / distance (shapely)
- generators.py: make_circle, make_koch_snowflake
- boxcount.py: box_count, box_dimension, d_summability_integral
- decomposition.py: whitney_decompose, d_sum, d_sum_levels, level_growth_exponent
"""

from .curve import Curve, Location
from .generators import make_circle, make_koch_snowflake
from .boxcount import box_count, box_dimension, d_summability_integral
from .decomposition import (
    DomainDecomposition,
    whitney_decompose,
    d_sum,
    d_sum_levels,
    level_growth_exponent,
)

__all__ = [
    "Curve",
    "Location",
    "make_circle",
    "make_koch_snowflake",
    "box_count",
    "box_dimension",
    "d_summability_integral",
    "DomainDecomposition",
    "whitney_decompose",
    "d_sum",
    "d_sum_levels",
    "level_growth_exponent",
]
