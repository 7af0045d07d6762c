"""
elasticity/params.py
============================================================
탄성 상수 관리

설명:
- (λ, μ)로부터 복소 Lamé-Navier 시스템의 계수를 계산합니다.
    α  = (μ+λ)/2,        β  = (3μ+λ)/2
    α* = α/(α²−β²),      β* = β/(α²−β²)
    σ  = λ/(2(λ+μ))      (Poisson ratio)
- 물리적 조건 μ > 0, λ > −2μ/3 을 만족하지 않으면 ParameterDomainError.

특징:
- LameParams는 불변(frozen) 객체라 스레드 간 공유가 안전합니다.
- 항등식 αα*−ββ* = 1, βα*−αβ* = 0 은 계수 정의에서 바로 나옵니다.
"""

from __future__ import annotations

from dataclasses import dataclass

from errors import ParameterDomainError


@dataclass(frozen=True)
class LameParams:
    lam: float
    mu: float
    alpha: float
    beta: float
    alpha_star: float
    beta_star: float
    sigma: float

    # --------------------------------------------------------
    # 항등식 잔차 (verify identities 에서 사용)
    # --------------------------------------------------------
    def identity_residuals(self) -> tuple[float, float]:
        """
        계수 항등식의 잔차를 반환합니다.

        Returns:
            tuple[float, float]: (|αα*−ββ*−1|, |βα*−αβ*|)
        """
        first = abs(self.alpha * self.alpha_star - self.beta * self.beta_star - 1.0)
        second = abs(self.beta * self.alpha_star - self.alpha * self.beta_star)
        return first, second

    @property
    def symmetric_sum(self) -> float:
        # βα*+αβ* = 2αβ/(α²−β²); 0이 아님 (리포트용 정보 값)
        return self.beta * self.alpha_star + self.alpha * self.beta_star

    def as_dict(self) -> dict[str, float]:
        return {
            "lambda": self.lam,
            "mu": self.mu,
            "alpha": self.alpha,
            "beta": self.beta,
            "alpha_star": self.alpha_star,
            "beta_star": self.beta_star,
            "sigma": self.sigma,
        }


def validate_lame_constants(lam: float, mu: float) -> tuple[bool, str]:
    """
    (λ, μ)가 물리적으로 허용되는지 검사합니다.

    Returns:
        tuple[bool, str]: (통과 여부, 이유)
    """
    if not (mu > 0):
        return False, f"shear modulus must be positive (mu={mu})"
    if not (lam > -2.0 * mu / 3.0):
        return False, f"lambda must exceed -2*mu/3 (lambda={lam}, mu={mu})"
    return True, "ok"


def make_params(lam: float, mu: float) -> LameParams:
    """
    탄성 상수에서 모든 파생 계수를 계산합니다.

    Args:
        lam: Lamé 제1상수 λ
        mu: 전단 탄성계수 μ (> 0)

    Returns:
        LameParams

    Note:
        - λ = μ = 1 → α=1, β=2, α*=−1/3, β*=−2/3, σ=0.25
    """
    ok, reason = validate_lame_constants(lam, mu)
    if not ok:
        raise ParameterDomainError(reason)

    alpha = (mu + lam) / 2.0
    beta = (3.0 * mu + lam) / 2.0
    denom = alpha * alpha - beta * beta  # = −μ(2μ+λ) < 0
    return LameParams(
        lam=float(lam),
        mu=float(mu),
        alpha=alpha,
        beta=beta,
        alpha_star=alpha / denom,
        beta_star=beta / denom,
        sigma=lam / (2.0 * (lam + mu)),
    )
