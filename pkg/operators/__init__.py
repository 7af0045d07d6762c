"""operators 패키지
============================================================
Teodorescu 연산자, 표현 공식, Lamé-Cauchy transform, 경계 극한, jump 문제 풀이.

주요 모듈:
- teodorescu.py: teodorescu, teodorescu_dz, verify_right_inverse
- representation.py: borel_pompeiu_rhs, cauchy_repr, ratio_kernel_repr, log_kernel_repr
- lame_cauchy.py: contour_terms, lame_cauchy_transform, lame_cauchy_transform_dz
- boundary.py: boundary_limit, boundary_jump, derivative_jump, probe_segments
- jump_problem.py: FieldOnGrid, JumpProblemSolution, 풀이기 2종, solve_jump_problem
- growth.py: asymptotic_growth_check
"""

from .teodorescu import teodorescu, teodorescu_dz, verify_right_inverse
from .lame_cauchy import contour_terms, lame_cauchy_transform, lame_cauchy_transform_dz
from .representation import borel_pompeiu_rhs, cauchy_repr, ratio_kernel_repr, log_kernel_repr
from .boundary import boundary_limit, boundary_jump, derivative_jump, probe_segments, midpoint_values
from .jump_problem import (
    FieldOnGrid,
    JumpProblemSolution,
    BaseJumpSolver,
    CauchyTransformSolver,
    WhitneyTeodorescuSolver,
    SOLVERS,
    solve_jump_problem,
    sample_field,
    grid_points,
    anchored_difference,
    method_agreement,
    lame_residual,
)
from .growth import asymptotic_growth_check

__all__ = [
    "teodorescu",
    "teodorescu_dz",
    "verify_right_inverse",
    "contour_terms",
    "lame_cauchy_transform",
    "lame_cauchy_transform_dz",
    "borel_pompeiu_rhs",
    "cauchy_repr",
    "ratio_kernel_repr",
    "log_kernel_repr",
    "boundary_limit",
    "boundary_jump",
    "derivative_jump",
    "probe_segments",
    "midpoint_values",
    "FieldOnGrid",
    "JumpProblemSolution",
    "BaseJumpSolver",
    "CauchyTransformSolver",
    "WhitneyTeodorescuSolver",
    "SOLVERS",
    "solve_jump_problem",
    "sample_field",
    "grid_points",
    "anchored_difference",
    "method_agreement",
    "lame_residual",
    "asymptotic_growth_check",
]
