"""The hypercone dual Frank-Wolfe module."""

# ruff: noqa: F401
from .auto_cd import AutoCdResult, auto_cd, duality_gap
from .cd import (compute_cd_projection, compute_cd_quadratic, default_cd,
                 find_e_hat, find_epsilon)
from .config import DFWConfig, StepRule
from .conic_program import ConicProgram, load_problem, problem_from_dict
from .quadratic_objective import QuadraticObjective
from .solver import SolveResult, SolveStatus, resolve_cd, solve
from .step_size import lipschitz_constant, step_size
from .subproblem import Subproblem, fw_gap, fw_subproblem, optimal_gap
from .trace import TRACE_COLUMNS, BestIterate, SolveTrace, TraceRecord
