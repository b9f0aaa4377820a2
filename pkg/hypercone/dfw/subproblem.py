"""The closed-form Frank-Wolfe subproblem over the compact dual slice."""

from typing import NamedTuple

import numpy as np

from ..cones import ConeOracle
from ..errors import NumericalError


class Subproblem(NamedTuple):
    """The subproblem optimum s, t_opt = min(0, lambda_min(v)) and lambda_min(v)."""

    s: np.ndarray
    t_opt: float
    lambda_min: float


def fw_subproblem(cone: ConeOracle, v: np.ndarray, c_d: float) -> Subproblem:
    """Minimise <v, s> over s in K* with <e, s> <= c_d.

    v is the dual gradient Tx + b. When v lies in K the optimum is s = 0;
    otherwise it is the conjugate vector at v - lambda_min(v) e scaled so
    that <e, s> = c_d.
    """
    if not c_d > 0.0:
        raise ValueError(f"c_d must be positive, got {c_d}")
    lam, conjugate = cone.boundary_conjugate(v)
    if conjugate is None:
        return Subproblem(np.zeros_like(v), 0.0, lam)
    alignment = float(np.dot(cone.e, conjugate))
    if alignment <= 0.0:
        raise NumericalError(f"Conjugate vector has <e, s> = {alignment:.3e} <= 0")
    return Subproblem(c_d / alignment * conjugate, lam, lam)


def fw_gap(grad_h: np.ndarray, y: np.ndarray, s: np.ndarray) -> float:
    """<-grad h(y), s - y>."""
    return float(-np.dot(grad_h, s - y))


def optimal_gap(grad_h: np.ndarray, y: np.ndarray, sub: Subproblem, c_d: float) -> float:
    """<grad h(y), y> - c_d t_opt, the gap against the optimal subproblem value.

    Equals fw_gap at the exact optimum s and carries none of the roundoff
    in the conjugate vector.
    """
    return float(np.dot(grad_h, y)) - c_d * sub.t_opt
