"""whitney 패키지
============================================================
Whitney jet (Lip(1+ν, γ)), 호환성 검사, compact support C^{1,ν} 확장, L^p 추정.

주요 모듈:
- jet.py: WhitneyJet, jet_from_field, constant_jet, check_jet, CSV 입출력
- background.py: BackgroundPolynomial, fit_background (jet 최소제곱 배경 다항식)
- extension.py: Extension (값 + 해석적 1·2계 Wirtinger 도함수), extend
- lp.py: lp_exponent, certificate_available, lp_norm_estimate
"""

from .jet import WhitneyJet, jet_from_field, constant_jet, check_jet
from .background import BackgroundPolynomial, fit_background
from .extension import Extension, ExtensionValues, extend, partition_of_unity_sum
from .lp import LpEstimate, lp_exponent, certificate_available, lp_norm_estimate

__all__ = [
    "WhitneyJet",
    "jet_from_field",
    "constant_jet",
    "check_jet",
    "BackgroundPolynomial",
    "fit_background",
    "Extension",
    "ExtensionValues",
    "extend",
    "partition_of_unity_sum",
    "LpEstimate",
    "lp_exponent",
    "certificate_available",
    "lp_norm_estimate",
]
