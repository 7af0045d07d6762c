"""
errors.py
============================================================
라이브러리 전체에서 공유하는 예외 계층

설명:
- 모든 예외는 LameError를 상속합니다. CLI는 LameError를 잡아서
  exit code 2(입력/사용 오류)로 변환합니다.
- CertificateUnavailableWarning은 예외가 아니라 경고입니다.
  (ν ≤ d/2 이면 L^p 인증이 없지만 계산은 계속 진행)
"""


class LameError(Exception):
    """라이브러리 예외의 공통 베이스"""


class ParameterDomainError(LameError):
    """비물리적인 탄성 상수 (μ ≤ 0 또는 λ ≤ −2μ/3)"""


class MissingDerivativeError(LameError):
    """정확한 Wirtinger 도함수가 필요한데 필드에 없음"""


class StencilOutOfDomainError(LameError):
    """유한차분 스텐실이 평가 가능한 영역을 벗어남"""


class NotHolomorphicError(LameError):
    """holomorphic이어야 하는 필드의 ∂z̄ 가 0이 아님"""


class BadDiscretizationError(LameError):
    """곡선 이산화가 너무 거칠거나 잘못됨"""


class DepthTooLargeError(LameError):
    """생성 깊이 / 분할 깊이 상한 초과 (메모리 가드)"""


class TooCloseToBoundaryError(LameError):
    """평가점이 contour quadrature 정확도 가드보다 경계에 가까움"""


class SingularDensityError(LameError):
    """area 적분 노드에서 밀도가 유한하지 않음"""


class JetInvalidError(LameError):
    """Whitney jet이 Lip(1+ν, γ) 조건을 만족하지 않음"""


class NonConvergentError(LameError):
    """경계 극한의 Richardson 외삽이 수렴하지 않음"""


class CertificateUnavailableWarning(UserWarning):
    """ν ≤ d/2 : L^p(p>2) 인증 없이 fractal 해를 계산함"""
