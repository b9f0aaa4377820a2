"""The p-cone {x | x_0 >= ||(x_1, ..., x_n)||_p}."""

import numpy as np

from .cone_oracle import ConeOracle, boundary_tolerance, unit

_BISECTION_STEPS = 200
_SHRINK_STEPS = 80


def _pnorm(v: np.ndarray, p: float) -> float:
    """The p-norm, computed on a rescaled copy so large entries do not overflow."""
    peak = float(np.max(np.abs(v))) if v.shape[0] else 0.0
    if peak == 0.0:
        return 0.0
    return peak * float(np.sum((np.abs(v) / peak) ** p) ** (1.0 / p))


class PCone(ConeOracle):
    """The p-cone in dimension n + 1, with interior point e = (1, 0, ..., 0)."""

    def __init__(self, p: float, n: int) -> None:
        if not p > 1.0 or not np.isfinite(p):
            raise ValueError(f"The p-cone exponent must be finite and > 1, got {p}")
        if n < 1:
            raise ValueError(f"The p-cone needs n >= 1, got {n}")
        self._p = float(p)
        self._n = n
        e = np.zeros(n + 1)
        e[0] = 1.0
        e.setflags(write=False)
        self._e = e

    @property
    def p(self) -> float:
        """The exponent p."""
        return self._p

    @property
    def n(self) -> int:
        """The number of coordinates under the norm."""
        return self._n

    @property
    def q(self) -> float:
        """The conjugate exponent p / (p - 1)."""
        return self._p / (self._p - 1.0)

    @property
    def dim(self) -> int:
        return self._n + 1

    @property
    def e(self) -> np.ndarray:
        return self._e

    def dual(self) -> "PCone":
        """The dual cone, which is the q-cone."""
        return PCone(self.q, self._n)

    def lambda_min(self, x: np.ndarray) -> float:
        return pcone_lambda_min(self, x)

    def conjugate_vector(self, z: np.ndarray) -> np.ndarray:
        return unit(pcone_conjugate_vector(self, z))

    def dual_lambda_min(self, y: np.ndarray) -> float | None:
        y = self.check_point(y)
        return float(y[0]) - _pnorm(y[1:], self.q)

    @property
    def has_closed_form_project(self) -> bool:
        return True

    def closed_form_project(self, x: np.ndarray) -> np.ndarray:
        return pcone_project(self, x)


def pcone_lambda_min(cone: PCone, x: np.ndarray) -> float:
    """x_0 - ||x_bar||_p."""
    x = cone.check_point(x)
    return float(x[0]) - _pnorm(x[1:], cone.p)


def pcone_conjugate_vector(cone: PCone, z: np.ndarray) -> np.ndarray:
    """s_0 = z_0^(p-1), s_i = -sign(z_i) |z_i|^(p-1) at a boundary point z."""
    z = cone.check_point(z)
    if not np.any(z):
        return cone.e.copy()
    if abs(pcone_lambda_min(cone, z)) > boundary_tolerance(z):
        raise ValueError("Point is not on the boundary of the p-cone")
    exponent = cone.p - 1.0
    conjugate = np.empty_like(z)
    conjugate[0] = max(float(z[0]), 0.0) ** exponent
    conjugate[1:] = -np.sign(z[1:]) * np.abs(z[1:]) ** exponent
    return conjugate


def _shrink(magnitudes: np.ndarray, beta: float, exponent: float) -> np.ndarray:
    """Solve u + beta * u^exponent = a for u in [0, a], coordinatewise."""
    lower = np.zeros_like(magnitudes)
    upper = magnitudes.copy()
    for _ in range(_SHRINK_STEPS):
        middle = 0.5 * (lower + upper)
        too_big = middle + beta * middle**exponent > magnitudes
        upper = np.where(too_big, middle, upper)
        lower = np.where(too_big, lower, middle)
    return 0.5 * (lower + upper)


def pcone_project(cone: PCone, x: np.ndarray) -> np.ndarray:
    """Euclidean projection onto the p-cone by bisection on the KKT multiplier.

    On the boundary the projection is (tau, u) with tau = ||u||_p and
    u_i + beta |u_i|^(p-1) = |x_i| for beta = (tau - x_0) / tau^(p-1); tau is
    the unique sign change of ||u(tau)||_p - tau.
    """
    x = cone.check_point(x)
    head, tail = float(x[0]), x[1:]
    if head >= _pnorm(tail, cone.p):
        return x.copy()
    if -head >= _pnorm(tail, cone.q):
        return np.zeros_like(x)
    magnitudes = np.abs(tail)
    exponent = cone.p - 1.0

    def excess(tau: float) -> tuple[float, np.ndarray]:
        beta = (tau - head) / tau**exponent
        shrunk = _shrink(magnitudes, beta, exponent)
        return _pnorm(shrunk, cone.p) - tau, shrunk

    lower = max(head, 0.0)
    upper = float(np.sum(magnitudes)) + abs(head) + 1.0
    if lower == 0.0:
        lower = 1e-300
    for _ in range(_BISECTION_STEPS):
        middle = 0.5 * (lower + upper)
        gap, _ = excess(middle)
        if gap > 0.0:
            lower = middle
        else:
            upper = middle
        if upper - lower <= 1e-15 * upper:
            break
    tau = 0.5 * (lower + upper)
    _, shrunk = excess(tau)
    projection = np.empty_like(x)
    projection[0] = tau
    projection[1:] = np.sign(tail) * shrunk
    return projection
