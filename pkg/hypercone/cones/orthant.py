"""The nonnegative orthant with its closed-form oracles."""

import numpy as np

from .cone_oracle import ConeOracle, boundary_tolerance


class OrthantCone(ConeOracle):
    """The nonnegative orthant in n dimensions, with e the all-ones vector."""

    def __init__(self, n: int) -> None:
        if n < 1:
            raise ValueError(f"The orthant needs n >= 1, got {n}")
        e = np.ones(n)
        e.setflags(write=False)
        self._e = e

    @property
    def dim(self) -> int:
        return self._e.shape[0]

    @property
    def e(self) -> np.ndarray:
        return self._e

    def lambda_min(self, x: np.ndarray) -> float:
        return float(np.min(self.check_point(x)))

    def conjugate_vector(self, z: np.ndarray) -> np.ndarray:
        z = self.check_point(z)
        tol = boundary_tolerance(z)
        lowest = float(np.min(z))
        if abs(lowest) > tol:
            raise ValueError("Point is not on the boundary of the orthant")
        conjugate = np.zeros_like(z)
        conjugate[int(np.flatnonzero(z <= lowest + tol)[0])] = 1.0
        return conjugate

    def dual_lambda_min(self, y: np.ndarray) -> float | None:
        return self.lambda_min(y)

    @property
    def has_closed_form_project(self) -> bool:
        return True

    def closed_form_project(self, x: np.ndarray) -> np.ndarray:
        return np.maximum(self.check_point(x), 0.0)
