"""The cone oracle interface."""

from abc import ABC, abstractmethod

import numpy as np

BOUNDARY_TOL = 1e-6


def boundary_tolerance(z: np.ndarray) -> float:
    """How far lambda_min(z) may sit from zero for z to count as a boundary point."""
    return BOUNDARY_TOL * (1.0 + float(np.linalg.norm(z)))


def unit(vector: np.ndarray) -> np.ndarray:
    """Scale a nonzero vector to unit Euclidean norm."""
    return vector / np.linalg.norm(vector)


class ConeOracle(ABC):
    """A regular closed convex cone K with an interior point e."""

    @property
    @abstractmethod
    def dim(self) -> int:
        """The ambient dimension m."""

    @property
    @abstractmethod
    def e(self) -> np.ndarray:
        """The interior point the minimum eigenvalue is measured along."""

    @abstractmethod
    def lambda_min(self, x: np.ndarray) -> float:
        """sup {t | x - te in K}."""

    @abstractmethod
    def conjugate_vector(self, z: np.ndarray) -> np.ndarray:
        """A unit vector of K* orthogonal to the boundary point z."""

    def boundary_conjugate(self, x: np.ndarray) -> tuple[float, np.ndarray | None]:
        """lambda_min(x) and, when negative, a conjugate vector at x - lambda_min(x) e."""
        lam = self.lambda_min(x)
        if lam >= 0.0:
            return lam, None
        return lam, self.conjugate_vector(x - lam * self.e)

    def dual_lambda_min(self, y: np.ndarray) -> float | None:
        """The minimum eigenvalue of y in the dual cone, when one is available."""
        del y
        return None

    @property
    def has_closed_form_project(self) -> bool:
        """Whether closed_form_project is available."""
        return False

    def closed_form_project(self, x: np.ndarray) -> np.ndarray:
        """The Euclidean projection of x onto the cone."""
        raise NotImplementedError(f"{type(self).__name__} has no closed-form projection")

    def contains(self, x: np.ndarray, tol: float = 0.0) -> bool:
        """Whether lambda_min(x) >= -tol."""
        return self.lambda_min(x) >= -tol

    def check_point(self, x: np.ndarray) -> np.ndarray:
        """Coerce x into a real vector of the cone's dimension."""
        arr = np.asarray(x, dtype=np.float64)
        if arr.shape != (self.dim,):
            raise ValueError(
                f"Expected a point of dimension {self.dim}, got shape {arr.shape}"
            )
        return arr
