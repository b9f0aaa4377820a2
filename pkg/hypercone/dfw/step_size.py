"""Step size rules for the dual Frank-Wolfe iteration."""

import numpy as np

from .config import StepRule
from .conic_program import ConicProgram


def lipschitz_constant(program: ConicProgram) -> float:
    """||T||^2 / mu, a Lipschitz constant of grad h."""
    return program.op_norm**2 / program.objective.mu


def step_size(
    rule: StepRule,
    k: int,
    grad_h: np.ndarray,
    d: np.ndarray,
    program: ConicProgram,
    lipschitz: float | None = None,
) -> float:
    """The step along d = s - y at iteration k."""
    match rule:
        case StepRule.DIMINISHING:
            return 2.0 / (k + 2.0)
        case StepRule.EXACT:
            curvature = program.dual_curvature(d)
            if curvature <= 0.0:
                return 1.0
            return float(np.clip(-np.dot(grad_h, d) / curvature, 0.0, 1.0))
        case StepRule.LIPSCHITZ:
            constant = lipschitz_constant(program) if lipschitz is None else lipschitz
            length = float(np.dot(d, d))
            if length == 0.0:
                return 1.0
            return float(np.clip(-np.dot(grad_h, d) / (constant * length), 0.0, 1.0))
        case _:
            raise ValueError(f"Unrecognised step rule: {rule}")
