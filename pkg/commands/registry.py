"""
commands/registry.py
============================================================
verify 스위트 레지스트리

이 모듈은 `verify` 명령이 실행할 수 있는 스위트와 각 스위트의 검사 목록을 정의합니다.
등록되지 않은 스위트 이름은 사용 오류로 처리됩니다.

새로운 검사 추가 방법:
1. 해당 스위트의 "checks" 에 검사 이름, 근거 문구(anchor), 허용오차 키를 추가
2. verification/suites.py 의 스위트 함수에서 같은 이름으로 CheckResult 를 만듦
3. verification/runner.py 가 레지스트리와 결과가 일치하는지 확인
"""

# ============================================================
# verify 스위트 목록
# ============================================================
# 구조:
#   "스위트이름": {
#       "description": "한 줄 설명",
#       "checks": {
#           "검사이름": {"anchor": "근거 항등식/정리", "tolerance": "DEFAULT_TOLERANCES 키 또는 None"},
#       },
#   }
#
# Note:
#   - tolerance 가 None 인 검사는 정보용이거나, 스위트가 고정 부등식으로 직접 판정합니다
#     (예: d-sum 증분 비율 < 1)
#   - anchor 문자열은 JSON 리포트에 그대로 들어갑니다

VERIFY_SUITES = {
    # 계수 항등식 + 커널 원소 (universal displacement)
    "identities": {
        "description": "coefficient identities and universal displacements",
        "checks": {
            "coefficient_identity": {"anchor": "alpha*alpha_star - beta*beta_star = 1", "tolerance": "identity"},
            "coefficient_symmetry": {"anchor": "beta*alpha_star - alpha*beta_star = 0", "tolerance": "identity"},
            "symmetric_sum": {"anchor": "beta*alpha_star + alpha*beta_star = 2*alpha*beta/(alpha^2 - beta^2)",
                              "tolerance": None},
            "kernel_exact": {"anchor": "L[A z + conj(phi(z))] = 0", "tolerance": "kernel_exact"},
            "kernel_fd": {"anchor": "L[A z + conj(phi(z))] = 0 (finite differences)", "tolerance": "kernel_fd"},
            "fd_convergence_rate": {"anchor": "composed central differences are O(h^2)", "tolerance": "fd_rate_low"},
        },
    },

    # Teodorescu 연산자의 오른쪽 역원 성질
    "inverse": {
        "description": "Teodorescu operator as right inverse of the Lame-Navier operator",
        "checks": {
            "teodorescu_polar": {"anchor": "T[1](0) = beta_star on the unit disk", "tolerance": "cauchy_repr"},
            "right_inverse_one_depth8": {"anchor": "L T[g] = g in Omega", "tolerance": "right_inverse"},
            "right_inverse_one_depth10": {"anchor": "L T[g] = g in Omega", "tolerance": "right_inverse"},
            "right_inverse_xi_depth8": {"anchor": "L T[g] = g in Omega", "tolerance": "right_inverse"},
            "right_inverse_xi_depth10": {"anchor": "L T[g] = g in Omega", "tolerance": "right_inverse"},
            "right_inverse_exterior": {"anchor": "L T[g] = 0 in the exterior domain", "tolerance": "right_inverse"},
            "depth_improvement": {"anchor": "quadrature refinement (depth 8 -> 10) shrinks the residual",
                                  "tolerance": "depth_improvement"},
        },
    },

    # Borel-Pompeiu 공식
    "borel_pompeiu": {
        "description": "Borel-Pompeiu representation on the unit disk",
        "checks": {
            "bp_z": {"anchor": "Borel-Pompeiu formula, f = z", "tolerance": "borel_pompeiu"},
            "bp_conj_z2": {"anchor": "Borel-Pompeiu formula, f = conj(z)^2", "tolerance": "borel_pompeiu"},
            "bp_modulus_square": {"anchor": "Borel-Pompeiu formula, f = |z|^2", "tolerance": "borel_pompeiu"},
            "bp_z2_conj_z": {"anchor": "Borel-Pompeiu formula, f = z^2 conj(z)", "tolerance": "borel_pompeiu"},
            "bp_exterior": {"anchor": "Borel-Pompeiu right-hand side vanishes outside", "tolerance": "borel_pompeiu"},
            "ratio_representation": {"anchor": "ratio-kernel representation formula", "tolerance": "borel_pompeiu"},
            "log_representation": {"anchor": "log-kernel representation formula", "tolerance": "borel_pompeiu"},
        },
    },

    # Cauchy 표현식 (커널 원소 재현)
    "cauchy": {
        "description": "Cauchy formula for solutions of the homogeneous system",
        "checks": {
            "cauchy_universal": {"anchor": "Cauchy formula reproduces kernel elements", "tolerance": "cauchy_repr"},
            "cauchy_constant": {"anchor": "constants are kernel elements", "tolerance": "kernel_fd"},
        },
    },

    # jump 관계식 + 방법 간 일치
    "jumps": {
        "description": "jump relations of the Lame-Cauchy transform and uniqueness",
        "checks": {
            "closed_form_transform": {"anchor": "C^L{1,0,0} = 1 inside, 0 outside",
                                      "tolerance": "closed_form_transform"},
            "jump_f0_one": {"anchor": "F+ - F- = f0", "tolerance": "jump_f0"},
            "jump_f0_z": {"anchor": "F+ - F- = f0", "tolerance": "jump_f0"},
            "jump_f0_z2": {"anchor": "F+ - F- = f0", "tolerance": "jump_f0"},
            "jump_f1_one": {"anchor": "[dz F]+ - [dz F]- = f1", "tolerance": "jump_f1"},
            "jump_f1_z": {"anchor": "[dz F]+ - [dz F]- = f1", "tolerance": "jump_f1"},
            "jump_f1_z2": {"anchor": "[dz F]+ - [dz F]- = f1", "tolerance": "jump_f1"},
            "method_agreement_one": {"anchor": "solution unique up to an additive constant",
                                     "tolerance": "method_agreement"},
            "method_agreement_z": {"anchor": "solution unique up to an additive constant",
                                   "tolerance": "method_agreement"},
            "method_agreement_z2": {"anchor": "solution unique up to an additive constant",
                                    "tolerance": "method_agreement"},
            "lame_residual": {"anchor": "L F = 0 off the curve", "tolerance": "lame_residual"},
        },
    },

    # fractal 기하와 fractal 해
    "fractal": {
        "description": "box dimension, d-sums, L^p certificate and the fractal jump solution",
        "checks": {
            "box_dimension": {"anchor": "Koch snowflake box dimension log4/log3", "tolerance": "box_dimension"},
            "dsum_converges": {"anchor": "d-sum finite for d above the box dimension", "tolerance": None},
            "dsum_diverges": {"anchor": "d-sum increments do not shrink for d below the box dimension",
                              "tolerance": None},
            "uncovered_collar": {"anchor": "Whitney squares exhaust the domain", "tolerance": None},
            "lp_exponent_grid": {"anchor": "p = (2 - d)/(1 - nu) > 2 iff nu > d/2", "tolerance": None},
            "lp_stability": {"anchor": "second derivatives of the extension lie in L^p", "tolerance": "lp_stability"},
            "lp_fractal_increments": {"anchor": "L^p sum increments shrink on the Koch snowflake", "tolerance": None},
            "extension_blowup": {"anchor": "second derivatives grow at most like dist^(nu - 1)",
                                 "tolerance": "extension_blowup_factor"},
            "fractal_jump": {"anchor": "F = chi f~ - T[L f~] has jump f0", "tolerance": "fractal_jump"},
            "fractal_lame_residual": {"anchor": "L F = 0 off the fractal curve", "tolerance": "lame_residual"},
        },
    },

    # 무한대 근처 성장
    "growth": {
        "description": "logarithmic growth and decay of dz F at infinity",
        "checks": {
            "growth_bounded_one": {"anchor": "F = O(ln|z|)", "tolerance": "growth_ratio_factor"},
            "growth_bounded_z2": {"anchor": "F = O(ln|z|)", "tolerance": "growth_ratio_factor"},
            "dz_decay_z2": {"anchor": "dz F(infinity) = 0", "tolerance": "growth_dz"},
            "potential_decay_z2": {"anchor": "alpha conj(dz F) + beta dz F -> 0", "tolerance": None},
            "zero_jet": {"anchor": "zero data gives the zero solution", "tolerance": "identity"},
        },
    },
}


def validate_suite(name: str) -> tuple[bool, str]:
    """
    스위트 이름이 등록되어 있는지 확인합니다.

    Returns:
        tuple[bool, str]: (True, "ok") 또는 (False, 이유)
    """
    if name not in VERIFY_SUITES:
        return False, f"unknown suite: {name} (choose from {', '.join(VERIFY_SUITES)})"
    return True, "ok"
