"""elasticity 패키지
============================================================
평면 Lamé-Navier 시스템의 복소 표현과 Wirtinger 미분을 다룹니다.

주요 모듈:
- params.py: 탄성 상수 LameParams와 make_params (α, β, α*, β*, σ)
- fields.py: ClosedFormField (정확한 Wirtinger 도함수를 가진 테스트 필드),
  universal_displacement, 이름으로 찾는 필드 레지스트리
- operator.py: L_{α,β} 연산자 (정확 / 유한차분), body force 변환, dilatation

사용처:
- operators/*: Teodorescu, Borel-Pompeiu, Lamé-Cauchy transform
- whitney/jet.py: 필드에서 jet 샘플링
"""

from .params import LameParams, make_params
from .fields import ClosedFormField, universal_displacement, NAMED_FIELDS
from .operator import (
    apply_lame_operator,
    apply_lame_operator_fd,
    body_force_to_complex,
    complex_to_body_force,
    dilatation,
    wirtinger_second_fd,
)

__all__ = [
    "LameParams",
    "make_params",
    "ClosedFormField",
    "universal_displacement",
    "NAMED_FIELDS",
    "apply_lame_operator",
    "apply_lame_operator_fd",
    "body_force_to_complex",
    "complex_to_body_force",
    "dilatation",
    "wirtinger_second_fd",
]
