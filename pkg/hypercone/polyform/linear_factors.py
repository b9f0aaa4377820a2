"""The product of linear forms polynomial."""

# pylint: disable=invalid-name
from __future__ import annotations

from typing import Sequence

import numpy as np

from .polynomial_form import PolynomialForm, exclusive_products
from .sparse import Sparse


class LinearFactors(PolynomialForm):
    """A polynomial prod_j <a_j, x>."""

    def __init__(self, factors: Sequence[Sequence[float]] | np.ndarray) -> None:
        matrix = np.array(factors, dtype=np.float64)
        if matrix.ndim != 2 or matrix.shape[0] < 1 or matrix.shape[1] < 1:
            raise ValueError(f"Factors must be a non-empty matrix, got {matrix.shape}")
        if not np.all(np.isfinite(matrix)):
            raise ValueError("Factors must be finite")
        if np.any(np.all(matrix == 0.0, axis=1)):
            raise ValueError("Every linear factor must be nonzero")
        matrix.setflags(write=False)
        self._factors = matrix

    @property
    def n(self) -> int:
        return self._factors.shape[1]

    @property
    def d(self) -> int:
        return self._factors.shape[0]

    @property
    def factors(self) -> np.ndarray:
        """The coefficient vectors a_j as rows."""
        return self._factors

    def evaluate(self, x: np.ndarray) -> complex:
        x = self.check_point(x)
        return np.prod(self._factors @ x)

    def gradient(self, x: np.ndarray) -> np.ndarray:
        x = self.check_point(x)
        return exclusive_products(self._factors @ x) @ self._factors

    def to_sparse(self) -> Sparse:
        return Sparse.from_linear_factors(self._factors)
