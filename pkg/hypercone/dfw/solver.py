"""The dual Frank-Wolfe solver."""

# pylint: disable=too-many-locals
import logging
import time
from dataclasses import dataclass
from .._compat import StrEnum

import numpy as np

from ..errors import NumericalError
from .cd import default_cd
from .config import DFWConfig
from .conic_program import ConicProgram
from .step_size import step_size
from .subproblem import fw_subproblem, optimal_gap
from .trace import SolveTrace, TraceRecord

# Relative slack for deciding that <e, y> sits on the slice bound.
_SLICE_ACTIVE_TOL = 1e-6
# Relative slack for roundoff in a gap that must be nonnegative.
_NEGATIVE_GAP_TOL = 1e-12


class SolveStatus(StrEnum):
    """Why a solve stopped."""

    CONVERGED = "converged"
    MAX_ITERS = "max_iters"
    MAX_SECONDS = "max_seconds"
    CD_TOO_SMALL = "cd_too_small"


@dataclass(frozen=True)
class SolveResult:
    """The outcome of a solve.

    x_best is None when no iterate was feasible.
    """

    x_best: np.ndarray | None
    y_last: np.ndarray
    trace: SolveTrace
    x_last: np.ndarray
    status: SolveStatus
    c_d: float
    iterations: int
    fw_gap: float

    @property
    def objective(self) -> float | None:
        """The objective of the best feasible iterate."""
        best = self.trace.best_feasible
        return None if best is None else best.objective


def _check_gap(gap: float, iteration: int, scale: float) -> None:
    """Reject a gap below zero by more than roundoff in its two terms."""
    if gap < -_NEGATIVE_GAP_TOL * max(1.0, scale):
        raise NumericalError(
            f"Frank-Wolfe gap {gap:.3e} < 0 at iteration {iteration}: "
            "the eigenvalue oracle is inconsistent"
        )


def resolve_cd(program: ConicProgram, config: DFWConfig) -> float:
    """The slice bound a solve runs with."""
    c_d = default_cd(program) if config.c_d is None else config.c_d
    return c_d * config.cd_scale


def solve(program: ConicProgram, config: DFWConfig = DFWConfig()) -> SolveResult:
    """Minimise the dual over the compact slice and recover primal iterates.

    Starts from y = 0. Each iteration recovers x = grad f*(T*y), solves the
    subproblem at Tx + b in closed form and steps toward its solution.
    """
    c_d = resolve_cd(program, config)
    cone = program.cone
    objective = program.objective
    trace = SolveTrace()
    y = np.zeros(cone.dim)
    status = SolveStatus.MAX_ITERS
    gap = np.inf
    iteration = 0
    start = time.perf_counter()
    for iteration in range(config.max_iters):
        x = program.primal_point(y)
        grad_h = program.residual(x)
        try:
            subproblem = fw_subproblem(cone, grad_h, c_d)
        except NumericalError as exc:
            raise NumericalError(f"Subproblem failed at iteration {iteration}: {exc}") from exc
        value = objective.value(x)
        feasible = subproblem.lambda_min >= -config.feas_tol
        if feasible:
            trace.offer(iteration, x, value)
        gap = optimal_gap(grad_h, y, subproblem, c_d)
        _check_gap(gap, iteration, abs(float(np.dot(grad_h, y))) + c_d * abs(subproblem.t_opt))
        converged = gap <= config.fw_gap_tol and feasible
        stalled = (
            gap <= config.fw_gap_tol
            and not feasible
            and float(np.dot(cone.e, y)) >= (1.0 - _SLICE_ACTIVE_TOL) * c_d
        )
        direction = subproblem.s - y
        alpha = 0.0
        if not (converged or stalled):
            alpha = step_size(
                config.step_rule, iteration, grad_h, direction, program, config.lipschitz
            )
        if config.record_trace:
            trace.record(
                TraceRecord(
                    iteration,
                    gap,
                    value,
                    subproblem.lambda_min,
                    alpha,
                    time.perf_counter() - start,
                ),
                x if config.record_iterates else None,
            )
        if converged:
            status = SolveStatus.CONVERGED
            break
        if stalled:
            logging.warning("Slice bound %g is active at an infeasible optimum", c_d)
            status = SolveStatus.CD_TOO_SMALL
            break
        y = y + alpha * direction
        logging.debug(
            "iteration %d: gap=%.3e lambda_min=%.3e alpha=%.3e",
            iteration,
            gap,
            subproblem.lambda_min,
            alpha,
        )
        if time.perf_counter() - start > config.max_seconds:
            status = SolveStatus.MAX_SECONDS
            break
    x_last = program.primal_point(y)
    if status in (SolveStatus.MAX_ITERS, SolveStatus.MAX_SECONDS):
        # y moved after the last evaluation
        if cone.lambda_min(program.residual(x_last)) >= -config.feas_tol:
            trace.offer(iteration + 1, x_last, objective.value(x_last))
    best = trace.best_feasible
    return SolveResult(
        None if best is None else best.x,
        y,
        trace,
        x_last,
        status,
        c_d,
        iteration + 1,
        gap,
    )
