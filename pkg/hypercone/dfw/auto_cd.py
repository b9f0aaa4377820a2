"""Slice bound search by doubling when no closed-form bound applies."""

import dataclasses
import logging
from typing import NamedTuple

import numpy as np

from ..errors import CdExhaustedError
from .config import DFWConfig
from .conic_program import ConicProgram
from .solver import SolveResult, solve

MAX_DOUBLINGS = 30


class AutoCdResult(NamedTuple):
    """A certified primal-dual pair and the slice bound that produced it."""

    x: np.ndarray
    y: np.ndarray
    c_d: float
    doublings: int
    duality_gap: float
    result: SolveResult


def duality_gap(program: ConicProgram, x: np.ndarray, y: np.ndarray) -> float:
    """f(x) + h(y), which is zero exactly at a primal-dual optimal pair."""
    return program.objective.value(x) + program.dual_value(y)


def auto_cd(program: ConicProgram, config: DFWConfig = DFWConfig()) -> AutoCdResult:
    """Solve with c_D = 1, 2, 4, ... until the pair carries a zero-gap certificate."""
    c_d = 1.0
    diagnostics: dict[str, float] = {}
    for doublings in range(MAX_DOUBLINGS + 1):
        result = solve(program, dataclasses.replace(config, c_d=c_d, cd_scale=1.0))
        x, y = result.x_last, result.y_last
        lam = program.primal_lambda_min(x)
        gap = duality_gap(program, x, y)
        value = program.objective.value(x)
        if lam >= -config.feas_tol and abs(gap) <= config.certificate_tol * (1.0 + abs(value)):
            return AutoCdResult(x, y, c_d, doublings, gap, result)
        diagnostics = {"c_d": c_d, "lambda_min": lam, "duality_gap": gap, "objective": value}
        logging.warning(
            "c_D=%g not certified (lambda_min=%.3e, gap=%.3e); doubling", c_d, lam, gap
        )
        c_d *= 2.0
    raise CdExhaustedError(
        f"No certificate after {MAX_DOUBLINGS} doublings of c_D", diagnostics
    )
