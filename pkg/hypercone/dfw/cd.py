"""Bounds c_D on <e, y> for some optimal dual solution y."""

import logging

import numpy as np

from .conic_program import ConicProgram

CD_FLOOR = 1e-12
_EPSILON_HALVINGS = 60


def compute_cd_projection(e: np.ndarray, x0: np.ndarray) -> float:
    """||e|| ||e - x0|| for the projection of x0."""
    value = float(np.linalg.norm(e) * np.linalg.norm(np.asarray(e) - np.asarray(x0)))
    return max(value, CD_FLOOR)


def compute_cd_quadratic(
    program: ConicProgram, e_hat: np.ndarray, epsilon: float
) -> float:
    """||e_hat|| sqrt((2 f(e_hat / epsilon) + <c, Q^{-1} c>) lambda_max(Q)).

    Needs T e_hat = e and e_hat / epsilon feasible. f is taken without its
    constant term.
    """
    if not epsilon > 0.0:
        raise ValueError(f"epsilon must be positive, got {epsilon}")
    point = np.asarray(e_hat, dtype=np.float64) / epsilon
    if program.primal_lambda_min(point) < 0.0:
        raise ValueError("e_hat / epsilon is not feasible")
    objective = program.objective
    radicand = 2.0 * objective.quadratic_value(point) + objective.inverse_quad()
    value = float(np.linalg.norm(e_hat)) * float(
        np.sqrt(max(radicand, 0.0) * objective.lambda_max)
    )
    return max(value, CD_FLOOR)


def find_e_hat(program: ConicProgram) -> np.ndarray | None:
    """A point e_hat with T e_hat = e, or None when T cannot reach e."""
    e = program.cone.e
    if program.T is None:
        return e.copy()
    e_hat, *_ = np.linalg.lstsq(program.T, e, rcond=None)
    if np.linalg.norm(program.T @ e_hat - e) > 1e-8 * (1.0 + np.linalg.norm(e)):
        return None
    return e_hat


def find_epsilon(program: ConicProgram, e_hat: np.ndarray) -> float:
    """The first epsilon in 1, 1/2, 1/4, ... with e_hat / epsilon feasible."""
    epsilon = 1.0
    for _ in range(_EPSILON_HALVINGS):
        if program.primal_lambda_min(e_hat / epsilon) >= 0.0:
            return epsilon
        epsilon /= 2.0
    raise ValueError("No epsilon makes e_hat / epsilon feasible")


def default_cd(program: ConicProgram) -> float:
    """The closed-form slice bound for the program."""
    if program.is_projection and program.x0 is not None:
        return compute_cd_projection(program.cone.e, program.x0)
    e_hat = find_e_hat(program)
    if e_hat is None:
        logging.warning("No e_hat with T e_hat = e; the slice bound is unavailable")
        raise ValueError("T cannot reach e; pass an explicit c_D or use --cd auto")
    return compute_cd_quadratic(program, e_hat, find_epsilon(program, e_hat))
